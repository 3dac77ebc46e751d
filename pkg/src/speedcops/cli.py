"""Command-line interface.

Exit codes: 0 verified or passing, 1 failed check or separation found,
2 node budget exhausted, 3 bad input. ``SPEEDCOPS_BUDGET`` sets the default
node budget.
"""
from __future__ import annotations

import json
import sys
from typing import Callable

import click

from .budget import Budget, BudgetExceeded
from .certificates import (
    CertificateError,
    document,
    dumps,
    graph_json,
    recording,
    robber_json,
    strategy_from_json,
    strategy_json,
    verdict_json,
)
from .funnel import FUNNEL_VARIANT, Funnel, build_monotone_funnel, check_funnel, funnel_strategy
from .game import VariantSpec, simulate_script
from .graph import Graph, GraphFormatError, bits, format_speed, parse_graph, parse_speed, serialize_graph, to_mask
from .harness import FAMILIES, load_config, relation_suite, report_status, separation_hunt
from .layout import KINDS, parameter
from .solver import StrategyUndefined, cops_win, copwidth, verify_robber, verify_strategy
from .widths import pathwidth, treewidth

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _emit(doc: dict, out: str | None = None) -> None:
    text = dumps(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _guarded(fn: Callable[..., int]) -> Callable[..., None]:
    """Map exceptions to exit codes."""

    def run(*args, **kwargs):
        try:
            code = fn(*args, **kwargs)
        except BudgetExceeded as exc:
            click.echo(f"budget exhausted: {exc}", err=True)
            code = EXIT_BUDGET
        except (GraphFormatError, CertificateError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
            click.echo(f"input error: {exc}", err=True)
            code = EXIT_INPUT
        sys.exit(code)

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


speed_option = click.option("-s", "--speed", default="inf", show_default=True, help="Robber speed (integer or inf).")
budget_option = click.option("--budget", type=int, default=None, help="Node budget (default from SPEEDCOPS_BUDGET).")


@click.group()
def main() -> None:
    """Cops and robber games with bounded robber speed."""


@main.command()
@click.argument("family", type=click.Choice(sorted(FAMILIES)))
@click.argument("params", nargs=-1, type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@_guarded
def gen(family: str, params: tuple[int, ...], fmt: str) -> int:
    """Emit a graph from a generator family."""
    G = FAMILIES[family](*params)
    click.echo(serialize_graph(G, fmt), nl=False)
    return EXIT_OK


@main.command()
@click.argument("kind", type=click.Choice([*KINDS, "pw", "tw"]))
@click.argument("graph")
@speed_option
@budget_option
@_guarded
def param(kind: str, graph: str, speed: str, budget: int | None) -> int:
    """Compute a layout parameter, path-width or tree-width with a witness."""
    G = _graph(graph)
    s = parse_speed(speed)
    if kind in ("pw", "tw"):
        value, dec = (pathwidth if kind == "pw" else treewidth)(G, budget=Budget(budget))
        doc = document("parameter", parameter=kind, value=value, order=list(dec.order), graph=graph_json(G))
    else:
        value, layout = parameter(G, s, kind, Budget(budget))
        doc = document(
            "parameter", parameter=kind, speed=format_speed(s), value=value, layout=list(layout), graph=graph_json(G)
        )
    _emit(doc)
    return EXIT_OK


def _variant(visibility: str, activity: str, speed: str, monotone: str, lenient: bool) -> VariantSpec:
    return VariantSpec(
        visible=visibility == "visible",
        lazy=activity == "lazy",
        speed=parse_speed(speed),
        monotone=monotone,
        lenient=lenient,
    )


@main.command()
@click.argument("graph")
@click.option("--visibility", type=click.Choice(["visible", "invisible"]), default="visible", show_default=True)
@click.option("--activity", type=click.Choice(["active", "lazy"]), default="active", show_default=True)
@speed_option
@click.option("--monotone", type=click.Choice(["none", "robber", "cop"]), default="none", show_default=True)
@click.option("--lenient", is_flag=True, help="Robber-monotone: a capture on a cleared vertex is not a violation.")
@click.option("-k", "--cops", type=int, default=None, help="Decide this k instead of computing the copwidth.")
@click.option("--no-reduce", is_flag=True, help="Use the reference searches only.")
@budget_option
@click.option("-o", "--out", default=None, help="Write the certificate here instead of stdout.")
@_guarded
def solve(graph, visibility, activity, speed, monotone, lenient, cops, no_reduce, budget, out) -> int:
    """Decide a game (with -k) or compute its copwidth, with certificates."""
    G = _graph(graph)
    variant = _variant(visibility, activity, speed, monotone, lenient)
    b = Budget(budget)
    if cops is not None:
        verdict = cops_win(G, variant, cops, b, reduce=not no_reduce)
        if verdict.cops_win:
            ok = verify_strategy(G, variant, verdict.certificate, cops, b).cops_win
            cert = strategy_json(G, verdict.certificate)
        else:
            rec, replies = recording(verdict.certificate)
            ok = verify_robber(G, variant, rec, cops, b)
            cert = robber_json(G, verdict.certificate, replies)
        _emit(verdict_json(G, verdict, cert, ok), out)
        return EXIT_OK if ok else EXIT_FAIL
    res = copwidth(G, variant, b, reduce=not no_reduce)
    ok = verify_strategy(G, variant, res.win_cert, res.k, b).cops_win
    doc = document("copwidth", variant=variant.code, copwidth=res.k, verified=ok, win=strategy_json(G, res.win_cert))
    if res.lose_cert is not None:
        rec, replies = recording(res.lose_cert)
        held = verify_robber(G, variant, rec, res.k - 1, b)
        doc["lose"] = robber_json(G, res.lose_cert, replies)
        doc["lose_verified"] = held
        ok = ok and held
    doc["verified"] = ok
    _emit(doc, out)
    return EXIT_OK if ok else EXIT_FAIL


@main.command()
@click.argument("graph")
@click.option("--script", "script_path", required=True, help="One row of cop vertices per line.")
@click.option("--variant", "code", default="il_inf", show_default=True, help="Invisible variant code.")
@click.option("--settle-first", is_flag=True, help="Cops bound for clean vertices arrive first.")
@_guarded
def simulate(graph: str, script_path: str, code: str, settle_first: bool) -> int:
    """Replay a fixed cop script against an invisible robber."""
    G = _graph(graph)
    rows = []
    for line in _read(script_path).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(to_mask(int(x) for x in line.replace(",", " ").split()))
    trace = simulate_script(G, VariantSpec.parse(code), rows, settle_first=settle_first)
    doc = document(
        "trace",
        variant=code,
        width=trace.width,
        outcome=trace.describe(),
        recontamination=trace.recontamination_rounds,
        rows=[
            {"round": r.round, "cops": list(bits(r.cops)), "contaminated": list(bits(r.contamination))}
            for r in trace.rows
        ],
    )
    _emit(doc)
    return EXIT_OK if trace.outcome and trace.outcome.kind == "cleared" else EXIT_FAIL


@main.group()
def funnel() -> None:
    """Check, build or compile funnels."""


def _load_funnel(path: str) -> Funnel:
    data = json.loads(_read(path))
    return Funnel.from_json(data.get("funnel", data))


@funnel.command("check")
@click.argument("graph")
@click.option("--funnel", "funnel_path", required=True)
@_guarded
def funnel_check(graph: str, funnel_path: str) -> int:
    """Validate a funnel and report its width."""
    G = _graph(graph)
    res = check_funnel(G, _load_funnel(funnel_path))
    _emit(document("funnel-check", status=res.status, width=res.width, reason=res.reason, witness=list(res.witness)))
    return EXIT_FAIL if res.status == "invalid" else EXIT_OK


@funnel.command("build")
@click.argument("graph")
@click.option("-k", "--cops", type=int, default=None, help="Default: the visible lazy unbounded copwidth.")
@budget_option
@_guarded
def funnel_build(graph: str, cops: int | None, budget: int | None) -> int:
    """Build a monotone funnel of width below k, or report the hideout that prevents it."""
    G = _graph(graph)
    k = cops if cops is not None else copwidth(G, VariantSpec.parse("vl_inf"), Budget(budget)).k
    res = build_monotone_funnel(G, k)
    if not res.possible:
        _emit(document("funnel-build", k=k, possible=False, hideout=list(bits(res.hideout))))
        return EXIT_FAIL
    check = check_funnel(G, res.funnel)
    _emit(
        document(
            "funnel-build",
            k=k,
            possible=True,
            status=check.status,
            width=check.width,
            repairs=len(res.repairs),
            funnel=res.funnel.to_json(),
        )
    )
    return EXIT_OK


@funnel.command("compile")
@click.argument("graph")
@click.option("--funnel", "funnel_path", required=True)
@budget_option
@_guarded
def funnel_compile(graph: str, funnel_path: str, budget: int | None) -> int:
    """Turn a monotone funnel into a cop-monotone strategy and verify it."""
    G = _graph(graph)
    strat = funnel_strategy(G, _load_funnel(funnel_path))
    res = verify_strategy(G, FUNNEL_VARIANT, strat, strat.k, Budget(budget))
    doc = strategy_json(G, strat)
    doc["verified"] = res.cops_win
    _emit(doc)
    return EXIT_OK if res.cops_win else EXIT_FAIL


@main.command()
@click.argument("certificate")
@budget_option
@_guarded
def verify(certificate: str, budget: int | None) -> int:
    """Re-verify a cop-strategy certificate."""
    G, strat = strategy_from_json(json.loads(_read(certificate)))
    try:
        res = verify_strategy(G, strat.variant, strat, strat.k, Budget(budget))
    except StrategyUndefined as exc:
        click.echo(f"strategy undefined on a reached state: {exc}", err=True)
        return EXIT_FAIL
    _emit(document("verification", variant=strat.variant.code, k=strat.k, winner=res.winner,
                   failure=res.stats.get("failure")))
    return EXIT_OK if res.cops_win else EXIT_FAIL


@main.command()
@click.argument("config")
@click.option("--workers", type=int, default=1, show_default=True)
@budget_option
@click.option("-o", "--out", default=None)
@_guarded
def suite(config: str, workers: int, budget: int | None, out: str | None) -> int:
    """Run a relation suite described by an INI configuration."""
    cfg = load_config(_read(config))
    report = relation_suite(cfg.corpus, cfg.relations, budget if budget is not None else cfg.budget, workers)
    _emit(report, out)
    return {"pass": EXIT_OK, "fail": EXIT_FAIL, "budget": EXIT_BUDGET}[report_status(report)]


@main.command()
@click.argument("lo")
@click.argument("hi")
@speed_option
@click.option("--nmax", type=int, default=6, show_default=True)
@click.option("--random", "random_count", type=int, default=0, help="Random graphs with 8..nmax vertices.")
@click.option("--seed", type=int, default=0)
@click.option("--no-fixtures", is_flag=True)
@budget_option
@click.option("-o", "--out", default=None)
@_guarded
def hunt(lo, hi, speed, nmax, random_count, seed, no_fixtures, budget, out) -> int:
    """Search for graphs where variant LO needs fewer cops than HI."""
    s = parse_speed(speed)
    report = separation_hunt(
        VariantSpec.parse(lo, s), VariantSpec.parse(hi, s), s, nmax, budget, random_count, seed, not no_fixtures
    )
    _emit(report, out)
    return EXIT_FAIL if report["witnesses"] else EXIT_OK
