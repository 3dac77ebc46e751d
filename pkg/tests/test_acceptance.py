"""End-to-end acceptance runs.

Each test records one PASS/FAIL line, printed in the terminal summary.
The whole module takes roughly a quarter of an hour on one core.
"""
import pytest

from conftest import record
from speedcops.certificates import dumps, recording, strategy_from_json, strategy_json
from speedcops.funnel import FUNNEL_VARIANT, build_monotone_funnel, check_funnel, funnel_strategy
from speedcops.game import VariantSpec, simulate_script
from speedcops.generators import gen_backpath_tree, gen_ia_gap, gen_recontamination, gen_subdivided_clique
from speedcops.graph import INF, cycle_graph
from speedcops.harness import CorpusSpec, Relation, atlas_graphs, default_relations, generic_laws, relation_suite
from speedcops.scenarios import scenario_strategy
from speedcops.scripts import ia_gap_script, recontamination_expected, recontamination_script
from speedcops.solver import copwidth, cops_win, verify_robber, verify_strategy
from speedcops.widths import pathwidth

pytestmark = pytest.mark.acceptance

SPEEDS = (1, 2, INF)
CORPUS = CorpusSpec(exhaustive_n=5, random_count=200, random_n=(6, 7), seed=0)

IDENTITIES = [
    "rm-ia_s = cm-ia_s = cm-il_s = pw+1",
    "il_inf = tw+1",
    "rm-il_s = scol_s+1",
    "vl_s = sdeg_s+1",
    "il_1 = rm-il_1 = vl_1 = va_1 = degeneracy+1",
    "vl_inf = rm-vl_inf = cm-vl_inf = sdeg_inf+1",
]
ORDERING = [
    "adm_s+1 <= vl_s <= il_s <= rm-il_s",
    "va_s <= wcol_2s+1",
    "va_s <= scol_4s+1",
    *generic_laws(),
]


def V(code):
    return VariantSpec.parse(code)


def _relations(texts):
    return [rel for t in texts for rel in Relation.chain(t, SPEEDS)]


@pytest.fixture(scope="module")
def corpus_report():
    # identities and ordering laws share one pass so each copwidth is solved once
    return relation_suite(CORPUS, _relations(IDENTITIES + ORDERING))


def _split(report, texts):
    wanted = {rel.text for rel in _relations(texts)}
    rows = {k: v for k, v in report["relations"].items() if k in wanted}
    totals = {k: sum(c[k] for c in rows.values()) for k in ("pass", "fail", "budget")}
    problems = [p for p in report["problems"] if p["relation"] in wanted]
    return totals, problems


def test_1_identities(corpus_report):
    totals, problems = _split(corpus_report, IDENTITIES)
    ok = totals["fail"] == 0 and totals["budget"] == 0 and totals["pass"] > 0
    record("1 identities", ok, f"{corpus_report['graphs']} graphs, {totals}")
    assert ok, problems[:3]


def test_2_ordering(corpus_report):
    totals, problems = _split(corpus_report, ORDERING)
    ok = totals["fail"] == 0 and totals["budget"] == 0 and totals["pass"] > 0
    record("2 ordering", ok, f"{corpus_report['graphs']} graphs, {totals}")
    assert ok, problems[:3]


def test_3_ia_gap():
    G = gen_ia_gap(1, 1, 4)
    variant = V("ia_1")
    verdict = cops_win(G, variant, 4)
    solver_ok = verdict.cops_win and verify_strategy(G, variant, verdict.certificate, 4).cops_win
    trace = simulate_script(G, variant, ia_gap_script(G))
    script_ok = trace.outcome is not None and trace.outcome.kind == "cleared" and trace.width == 4
    pw = pathwidth(G)[0]
    rm = copwidth(G, V("rm-ia_1"))
    rm_ok = rm.k == pw + 1 >= 5 and verify_robber(G, V("rm-ia_1"), rm.lose_cert, rm.k - 1)
    ok = solver_ok and script_ok and rm_ok
    record("3 ia gap", ok, f"ia_1 <= 4 (solver and script), pw+1 = {pw + 1}, rm-ia_1 = {rm.k}")
    assert ok


def test_4_backpath_upper_bounds_and_cop_monotone_lower_side():
    details = []
    ok = True
    for params, code in (((3, 3, 1, 2), "va_1"), ((3, 3, 1, 2), "vl_1"), ((2, 2, 1, 2), "vl_1")):
        G = gen_backpath_tree(*params)
        res = verify_strategy(G, V(code), scenario_strategy(G, V(code)), 3)
        min_deg = min(G.degree(v) for v in range(G.n))
        ok &= res.cops_win and min_deg == 2
        details.append(f"{code}{params} n={G.n} wins={res.cops_win} states={res.stats['states']}")
    violations = gaps = graphs = 0
    for _, G in atlas_graphs(7):
        graphs += 1
        for s in SPEEDS:
            a = copwidth(G, V(f"va_{s}")).k
            b = copwidth(G, V(f"cm-va_{s}")).k
            violations += b < a
            gaps += b > a
    ok &= violations == 0
    details.append(f"cm-va >= va on {graphs} graphs x 3 speeds, {violations} violations, {gaps} strict")
    record("4 back-path trees", ok, "; ".join(details))
    assert ok


def test_5a_recontamination_analog():
    G = gen_recontamination(4, 1, 1, 1, 1, connectors=0)
    vals = {code: copwidth(G, V(code)) for code in ("il_4", "rm-il_4", "vl_4", "rm-vl_4")}
    certs = all(verify_strategy(G, V(c), r.win_cert, r.k).cops_win for c, r in vals.items())
    k = {c: r.k for c, r in vals.items()}
    ok = certs and k["il_4"] <= k["rm-il_4"] and k["vl_4"] <= k["rm-vl_4"]
    record("5a recontamination analog", ok, f"n={G.n} {k}")
    assert ok


def test_5b_recontamination_script():
    G = gen_recontamination(4, 8, 8, 2, 4)
    trace = simulate_script(G, V("il_4"), recontamination_script(G), settle_first=True)
    column = [row.contamination for row in trace.rows] == recontamination_expected(G)
    ok = trace.describe() == "cleared@23" and trace.width == 10 and trace.recontamination_rounds == [20] and column
    record(
        "5b recontamination script",
        ok,
        f"{trace.describe()}, width {trace.width}, recontamination at {trace.recontamination_rounds}, "
        f"{G.n} vertices",
    )
    assert ok


def test_6_funnel_theorem():
    failures = []
    graphs = repairs = 0
    for gid, G in CORPUS.graphs():
        graphs += 1
        k = copwidth(G, V("vl_inf")).k
        res = build_monotone_funnel(G, k)  # asserts the cut identities at every repair
        repairs += len(res.repairs)
        check = check_funnel(G, res.funnel) if res.possible else None
        if check is None or check.status != "monotone" or check.width > k - 1:
            failures.append(gid)
            continue
        strat = funnel_strategy(G, res.funnel)
        if not (strat.k <= k and verify_strategy(G, FUNNEL_VARIANT, strat, strat.k).cops_win):
            failures.append(gid)
    record("6 funnel theorem", not failures, f"{graphs} graphs, {len(failures)} failures, {repairs} repairs")
    assert not failures


def test_7_subdivided_cliques():
    bad = []
    for n in range(2, 6):
        for s in range(1, 4):
            G = gen_subdivided_clique(n, s)
            variant = V(f"rm-il_{s}")
            verdict = cops_win(G, variant, 3)
            if not (verdict.cops_win and verify_strategy(G, variant, verdict.certificate, 3).cops_win):
                bad.append((n, s))
    G = gen_subdivided_clique(4, 1)
    res = copwidth(G, V("vl_2"))
    lower = verify_robber(G, V("vl_2"), recording(res.lose_cert)[0], 3)
    ok = not bad and res.k == 4 and lower
    record("7 subdivided cliques", ok, f"rm-il_s <= 3 fails on {bad}; vl_2(K4 subdivided) = {res.k}")
    assert ok


def test_8_determinism_and_certificates():
    corpus = CorpusSpec(exhaustive_n=4, random_count=20, random_n=(5, 6), seed=1)
    relations = default_relations("all", SPEEDS)
    one = dumps(relation_suite(corpus, relations, workers=1))
    two = dumps(relation_suite(corpus, relations, workers=2))
    # failing rows carry certificates; make one and check it replays
    fail = relation_suite([("C5", cycle_graph(5))], Relation.chain("va_1 = wcol_1"))
    G, strat = strategy_from_json(fail["problems"][0]["evidence"]["lhs"]["win"])
    replay = verify_strategy(G, strat.variant, strat, strat.k).cops_win
    emitted = 0
    for code in ("va_2", "cm-vl_inf", "rm-ia_1", "il_2"):
        for _, H in CorpusSpec(exhaustive_n=4).graphs():
            res = copwidth(H, V(code))
            verify_strategy(H, V(code), res.win_cert, res.k)
            H2, again = strategy_from_json(strategy_json(H, res.win_cert))
            replay &= verify_strategy(H2, again.variant, again, again.k).cops_win
            if res.lose_cert is not None:
                replay &= verify_robber(H, V(code), res.lose_cert, res.k - 1)
            emitted += 1
    ok = one == two and replay
    record("8 determinism", ok, f"1 vs 2 workers identical={one == two}; {emitted} certificates re-verified={replay}")
    assert ok
