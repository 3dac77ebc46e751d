"""Relation suites over graph corpora, and the separation hunter."""
from __future__ import annotations

import configparser
import multiprocessing
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .budget import Budget, BudgetExceeded, default_budget
from .certificates import document, graph_json, recording, robber_json, strategy_json
from .game import VariantSpec
from .generators import (
    connected_graphs,
    gen_backpath_tree,
    gen_ia_gap,
    gen_recontamination,
    gen_subdivided_clique,
    random_connected,
)
from .graph import INF, Graph, Speed, format_speed, parse_speed
from .layout import parameter
from .scenarios import scenario_strategy
from .solver import copwidth, verify_robber, verify_strategy
from .widths import pathwidth, treewidth

FAMILIES = {
    "subdivided_clique": gen_subdivided_clique,
    "ia_gap": gen_ia_gap,
    "backpath_tree": gen_backpath_tree,
    "recontamination": gen_recontamination,
}

DEFAULT_SPEEDS: tuple[Speed, ...] = (1, 2, INF)

# ---------------------------------------------------------------- parameters

_CW = re.compile(r"(rm-|cm-)?([vi][al])_(\w+)")
_LAYOUT = re.compile(r"(wcol|scol|adm|sdeg)_(\w+)")
_TERM = re.compile(r"\s*(?P<name>[\w*-]+)\s*(?:\+\s*(?P<offset>\d+))?\s*")


def _speed(expr: str, s: Speed | None) -> Speed:
    if expr in ("inf", "oo"):
        return INF
    if expr.isdigit():
        return int(expr)
    m = re.fullmatch(r"(\d*)s", expr)
    if not m:
        raise ValueError(f"bad speed {expr!r}")
    if s is None:
        raise ValueError(f"{expr!r} needs a speed")
    factor = int(m.group(1) or 1)
    return INF if s == INF else factor * s


@dataclass(frozen=True)
class Term:
    """One side of a relation, e.g. ``rm-il_s``, ``pw+1``, ``wcol_2s+1`` or a constant."""

    name: str
    offset: int = 0

    @classmethod
    def parse(cls, text: str) -> Term:
        m = _TERM.fullmatch(text)
        if not m:
            raise ValueError(f"cannot parse term {text!r}")
        term = cls(m.group("name"), int(m.group("offset") or 0))
        term.resolve(1)
        return term

    @property
    def uses_speed(self) -> bool:
        return bool(re.search(r"_\d*s$", self.name))

    def resolve(self, s: Speed | None) -> str:
        """Concrete quantity name such as ``rm-il_2`` or ``scol_inf``."""
        name = self.name
        if name in ("pw", "tw", "degeneracy") or name.isdigit():
            return name
        m = _CW.fullmatch(name) or _LAYOUT.fullmatch(name)
        if not m:
            raise ValueError(f"unknown quantity {name!r}")
        head, expr = name.rsplit("_", 1)
        return f"{head}_{format_speed(_speed(expr, s))}"

    def __str__(self) -> str:
        return self.name + (f"+{self.offset}" if self.offset else "")


@dataclass(frozen=True)
class Relation:
    lhs: Term
    op: str  # "=" or "<="
    rhs: Term
    speeds: tuple[Speed, ...] = DEFAULT_SPEEDS

    @property
    def text(self) -> str:
        return f"{self.lhs} {self.op} {self.rhs}"

    @classmethod
    def chain(cls, text: str, speeds: Sequence[Speed] = DEFAULT_SPEEDS) -> list[Relation]:
        """``a = b = c`` becomes a = b, b = c; ``<=`` chains likewise."""
        parts = re.split(r"(<=|=)", text)
        terms = [Term.parse(p) for p in parts[0::2]]
        ops = parts[1::2]
        if len(terms) < 2:
            raise ValueError(f"relation {text!r} needs two sides")
        return [cls(terms[i], ops[i], terms[i + 1], tuple(speeds)) for i in range(len(ops))]

    def instances(self) -> list[Speed | None]:
        if self.lhs.uses_speed or self.rhs.uses_speed:
            return list(self.speeds)
        return [None]

    def holds(self, a: int, b: int) -> bool:
        return a == b if self.op == "=" else a <= b


IDENTITIES = (
    "rm-ia_s = cm-ia_s = cm-il_s = pw+1",
    "ia_inf = pw+1",
    "il_inf = rm-il_inf = tw+1",
    "rm-il_s = scol_s+1",
    "il_1 = rm-il_1 = vl_1 = va_1 = degeneracy+1",
    "vl_s = sdeg_s+1",
    "rm-vl_1 = degeneracy+1",
    "va_inf = tw+1",
    "vl_inf = rm-vl_inf = cm-vl_inf = sdeg_inf+1",
)

ORDERING = (
    "adm_s+1 <= vl_s <= il_s <= rm-il_s",
    "vl_s <= rm-vl_s <= rm-il_s",
    "va_s <= wcol_2s+1",
    "va_s <= scol_4s+1",
)


def generic_laws() -> list[str]:
    """plain <= robber- <= cop-monotone, visible <= invisible, lazy <= active, speed."""
    laws = []
    for base in ("va", "vl", "ia", "il"):
        laws.append(f"{base}_s <= rm-{base}_s <= cm-{base}_s")
    for mono in ("", "rm-", "cm-"):
        for act in "al":
            laws.append(f"{mono}v{act}_s <= {mono}i{act}_s")
        for vis in "vi":
            laws.append(f"{mono}{vis}l_s <= {mono}{vis}a_s")
        for base in ("va", "vl", "ia", "il"):
            laws.append(f"{mono}{base}_1 <= {mono}{base}_2 <= {mono}{base}_inf")
    return laws


def default_relations(which: str = "all", speeds: Sequence[Speed] = DEFAULT_SPEEDS) -> list[Relation]:
    texts: list[str] = []
    if which in ("all", "identities"):
        texts += IDENTITIES
    if which in ("all", "ordering"):
        texts += list(ORDERING) + generic_laws()
    out = []
    for t in texts:
        out += Relation.chain(t, speeds)
    return out


class Evaluator:
    """Computes and caches quantities for one graph, each under its own budget."""

    def __init__(self, G: Graph, budget: int | None = None):
        self.G = G
        self.limit = budget if budget is not None else default_budget()
        self.values: dict[str, int | BudgetExceeded] = {}
        self.witness: dict[str, object] = {}

    def value(self, name: str) -> int:
        if name.isdigit():
            return int(name)
        got = self.values.get(name)
        if got is None:
            try:
                got = self._compute(name, Budget(self.limit))
            except BudgetExceeded as exc:
                got = exc
            self.values[name] = got
        if isinstance(got, BudgetExceeded):
            raise got
        return got

    def _compute(self, name: str, budget: Budget) -> int:
        G = self.G
        if name == "pw":
            v, dec = pathwidth(G, budget=budget)
            self.witness[name] = dec
            return v
        if name == "tw":
            v, dec = treewidth(G, budget=budget)
            self.witness[name] = dec
            return v
        if name == "degeneracy":
            v, order = parameter(G, 1, "degeneracy")
            self.witness[name] = order
            return v
        m = _LAYOUT.fullmatch(name)
        if m:
            v, order = parameter(G, parse_speed(m.group(2)), m.group(1), budget)
            self.witness[name] = order
            return v
        variant = VariantSpec.parse(name)
        res = copwidth(G, variant, budget)
        self.witness[name] = res
        return res.k

    def evidence(self, name: str) -> dict:
        """Replayable certificates for a quantity, used on failing rows."""
        w = self.witness.get(name)
        if w is None:
            return {"value": str(self.values.get(name))}
        if isinstance(w, tuple):
            return {"value": self.values[name], "layout": list(w)}
        if hasattr(w, "order"):
            return {"value": self.values[name], "order": list(w.order)}
        variant = VariantSpec.parse(name)
        verify_strategy(self.G, variant, w.win_cert, w.k)
        out = {"value": w.k, "win": strategy_json(self.G, w.win_cert)}
        if w.lose_cert is not None:
            rec, replies = recording(w.lose_cert)
            verify_robber(self.G, variant, rec, w.k - 1)
            out["lose"] = robber_json(self.G, w.lose_cert, replies)
        return out


def evaluate(
    G: Graph, relations: Sequence[Relation], budget: int | None = None, with_evidence: bool = True
) -> list[dict]:
    """One row per (relation, speed): lhs and rhs values and a status."""
    ev = Evaluator(G, budget)
    rows = []
    for rel in relations:
        for s in rel.instances():
            lhs, rhs = rel.lhs.resolve(s), rel.rhs.resolve(s)
            row = {"relation": rel.text, "speed": None if s is None else format_speed(s), "lhs": lhs, "rhs": rhs}
            try:
                a = ev.value(lhs) + rel.lhs.offset
                b = ev.value(rhs) + rel.rhs.offset
            except BudgetExceeded as exc:
                row.update(status="budget", detail=str(exc))
                rows.append(row)
                continue
            row.update(lhs_value=a, rhs_value=b, status="pass" if rel.holds(a, b) else "fail")
            if row["status"] == "fail" and with_evidence:
                row["evidence"] = {"lhs": ev.evidence(lhs), "rhs": ev.evidence(rhs)}
            rows.append(row)
    return rows


# ---------------------------------------------------------------- corpora


@dataclass
class CorpusSpec:
    exhaustive_n: int = 0
    random_count: int = 0
    random_n: tuple[int, ...] = (6, 7)
    random_p: tuple[float, ...] = (0.3, 0.5, 0.7)
    seed: int = 0
    families: list[tuple[str, tuple]] = field(default_factory=list)

    def graphs(self) -> Iterator[tuple[str, Graph]]:
        """Deterministic expansion: exhaustive graphs, then random ones, then families."""
        for n in range(1, self.exhaustive_n + 1):
            for i, G in enumerate(connected_graphs(n)):
                yield f"n{n}#{i}", G
        rng = random.Random(self.seed)
        for i in range(self.random_count):
            n = rng.choice(self.random_n)
            p = rng.choice(self.random_p)
            yield f"random#{i}", random_connected(n, p, rng)
        for fam, args in self.families:
            yield f"{fam}{args}", FAMILIES[fam](*args)


def parse_family(text: str) -> tuple[str, tuple]:
    m = re.fullmatch(r"\s*(\w+)\s*\(([^)]*)\)\s*", text)
    if not m or m.group(1) not in FAMILIES:
        raise ValueError(f"bad family instance {text!r}; families: {sorted(FAMILIES)}")
    args = tuple(int(a) for a in m.group(2).split(",") if a.strip())
    return m.group(1), args


def _list(raw: str, conv) -> tuple:
    return tuple(conv(x) for x in re.split(r"[,\s]+", raw.strip()) if x)


@dataclass
class SuiteConfig:
    corpus: CorpusSpec
    relations: list[Relation]
    budget: int | None = None


def load_config(text: str) -> SuiteConfig:
    """Read a suite configuration in INI form.

    ``[corpus]``: exhaustive_n, random_count, random_n, random_p, seed and
    ``families`` (one ``name(args)`` per line). ``[relations]``: ``defaults``
    (all, identities, ordering or none), ``speeds`` and ``extra`` (one
    relation chain per line). ``[budget]``: ``nodes`` per cell.
    """
    cp = configparser.ConfigParser()
    cp.read_string(text)
    c = cp["corpus"] if cp.has_section("corpus") else {}
    corpus = CorpusSpec(
        exhaustive_n=int(c.get("exhaustive_n", 0)),
        random_count=int(c.get("random_count", 0)),
        random_n=_list(c.get("random_n", "6,7"), int),
        random_p=_list(c.get("random_p", "0.3,0.5,0.7"), float),
        seed=int(c.get("seed", 0)),
        families=[parse_family(line) for line in c.get("families", "").splitlines() if line.strip()],
    )
    r = cp["relations"] if cp.has_section("relations") else {}
    speeds = _list(r.get("speeds", "1,2,inf"), parse_speed)
    which = r.get("defaults", "all").strip()
    relations = [] if which == "none" else default_relations(which, speeds)
    for line in r.get("extra", "").splitlines():
        if line.strip():
            relations += Relation.chain(line, speeds)
    b = cp["budget"] if cp.has_section("budget") else {}
    budget = int(b["nodes"]) if "nodes" in b else None
    return SuiteConfig(corpus, relations, budget)


# ---------------------------------------------------------------- suite


def _cell(job: tuple[str, Graph, list[Relation], int | None]) -> tuple[str, Graph, list[dict]]:
    gid, G, relations, budget = job
    return gid, G, evaluate(G, relations, budget)


def relation_suite(
    corpus: CorpusSpec | Iterable[tuple[str, Graph]],
    relations: Sequence[Relation],
    budget: int | None = None,
    workers: int = 1,
) -> dict:
    """Evaluate every relation on every corpus graph.

    The report keeps per-relation counts plus every failing or over-budget
    cell with its graph; it does not depend on the number of workers.
    """
    graphs = corpus.graphs() if isinstance(corpus, CorpusSpec) else iter(corpus)
    jobs = ((gid, G, list(relations), budget) for gid, G in graphs)
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            results = list(pool.imap(_cell, jobs, chunksize=4))
    else:
        results = [_cell(j) for j in jobs]
    summary: dict[str, dict[str, int]] = {}
    problems = []
    for gid, G, rows in results:
        for row in rows:
            key = row["relation"]
            counts = summary.setdefault(key, {"pass": 0, "fail": 0, "budget": 0})
            counts[row["status"]] += 1
            if row["status"] != "pass":
                problems.append({"graph_id": gid, "graph": graph_json(G), **row})
    totals = {k: sum(c[k] for c in summary.values()) for k in ("pass", "fail", "budget")}
    return document(
        "suite-report",
        graphs=len(results),
        totals=totals,
        relations=summary,
        problems=problems,
    )


def report_status(report: dict) -> str:
    if report["totals"]["fail"]:
        return "fail"
    if report["totals"]["budget"]:
        return "budget"
    return "pass"


# ---------------------------------------------------------------- hunting


def atlas_graphs(n_max: int) -> Iterator[tuple[str, Graph]]:
    """Connected graphs up to isomorphism from the networkx atlas (n <= 7)."""
    for i, H in enumerate(nx.graph_atlas_g()):
        n = H.number_of_nodes()
        if n == 0 or n > n_max:
            continue
        if nx.is_connected(H):
            yield f"atlas#{i}", Graph.from_edges(n, list(H.edges()))


def _fixtures(lo: VariantSpec, hi: VariantSpec, s: Speed) -> list[tuple[str, Graph, str]]:
    """Known separating families that apply to this pair; mode is full or upper."""
    out = []
    pair = (lo.visible, lo.lazy, hi.visible, hi.lazy)
    if pair == (False, False, False, False) and lo.monotone == "none" and hi.monotone != "none" and s != INF:
        out.append((f"ia_gap{(s, 1, 4)}", gen_ia_gap(s, 1, 4), "full"))
    if pair == (True, False, True, False) and lo.monotone == "none" and hi.monotone == "cop" and s != INF:
        params = (2, 2, s, 2 * s)
        out.append((f"backpath_tree{params}", gen_backpath_tree(*params), "upper"))
    if lo.lazy and hi.lazy and lo.visible == hi.visible and lo.monotone == "none" and hi.monotone == "robber":
        if s != INF and s >= 4:
            params = (s, 1, 1, 1, 1, 0)
            out.append((f"recontamination{params}", gen_recontamination(*params), "full"))
    return out


def separation_hunt(
    lo: VariantSpec,
    hi: VariantSpec,
    s: Speed,
    n_max: int,
    budget: int | None = None,
    random_count: int = 0,
    seed: int = 0,
    fixtures: bool = True,
) -> dict:
    """Look for graphs with cw(lo) < cw(hi).

    Searches connected graphs up to isomorphism for n <= min(n_max, 7),
    seeded random graphs for larger n, and the fixture families that fit the
    pair. Fixtures whose upper variant is out of reach only report the
    certified upper bound for the lower variant.
    """
    lo, hi = lo.with_speed(s), hi.with_speed(s)
    pool: list[tuple[str, Graph, str]] = [(gid, G, "full") for gid, G in atlas_graphs(min(n_max, 7))]
    rng = random.Random(seed)
    for i in range(random_count if n_max > 7 else 0):
        n = rng.randint(8, n_max)
        pool.append((f"random#{i}", random_connected(n, rng.choice((0.25, 0.4, 0.6)), rng), "full"))
    if fixtures:
        pool += _fixtures(lo, hi, s)
    witnesses, partial, skipped = [], [], []
    for gid, G, mode in pool:
        if mode == "upper":
            strat = scenario_strategy(G, lo)
            ok = verify_strategy(G, lo, strat, 3, Budget(budget)).cops_win
            partial.append({"graph_id": gid, "n": G.n, "lo_upper": 3 if ok else None, "hi": "not computed"})
            continue
        try:
            a = copwidth(G, lo, Budget(budget))
            b = copwidth(G, hi, Budget(budget))
        except BudgetExceeded as exc:
            skipped.append({"graph_id": gid, "n": G.n, "detail": str(exc)})
            continue
        if a.k < b.k:
            verify_strategy(G, lo, a.win_cert, a.k)
            verify_strategy(G, hi, b.win_cert, b.k)
            rec, replies = recording(b.lose_cert)
            held = verify_robber(G, hi, rec, b.k - 1)
            witnesses.append(
                {
                    "graph_id": gid,
                    "graph": graph_json(G),
                    "lo": a.k,
                    "hi": b.k,
                    "lo_certificate": strategy_json(G, a.win_cert),
                    "hi_lower_certificate": robber_json(G, b.lose_cert, replies),
                    "hi_lower_verified": held,
                }
            )
    return document(
        "hunt-report",
        lo=lo.code,
        hi=hi.code,
        searched=len(pool),
        witnesses=witnesses,
        upper_only=partial,
        over_budget=skipped,
    )
