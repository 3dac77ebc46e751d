import pytest

from speedcops.game import VariantSpec
from speedcops.generators import gen_backpath_tree, gen_ia_gap
from speedcops.graph import to_mask
from speedcops.scenarios import LabelError, active_move, lazy_move, read_tree, scenario_strategy
from speedcops.solver import copwidth, verify_strategy


def V(code):
    return VariantSpec.parse(code)


@pytest.fixture(scope="module")
def long_backs():
    G = gen_backpath_tree(2, 2, 2, 4)
    return G, read_tree(G)


def test_root_start(long_backs):
    _, view = long_backs
    assert active_move(view, 0, 0) == ("A", 1 << 0)


def test_leaf_with_guarded_parent(long_backs):
    _, view = long_backs
    leaf = len(view.parent) - 1
    p = view.parent[leaf]
    letter, ann = active_move(view, 1 << p, leaf)
    assert letter == "C/E" and ann == to_mask([leaf, p])


def test_walled_back_thread_closes_in(long_backs):
    _, view = long_backs
    th = next(t for t in view.thread_of.values() if t.kind == "back" and len(t.inner) == 3)
    top, bottom = th.ends
    r = th.inner[1]
    letter, ann = active_move(view, to_mask([top, bottom]), r)
    assert letter == "F"
    assert ann.bit_count() == 3
    # one wall steps onto the thread towards the robber
    assert ann & to_mask(th.inner) and not ann >> r & 1


def test_unguarded_back_thread(long_backs):
    _, view = long_backs
    th = next(t for t in view.thread_of.values() if t.kind == "back")
    letter, ann = active_move(view, 0, th.inner[0])
    assert letter == "B" and ann == to_mask(th.ends)


def test_lazy_rules(long_backs):
    G, view = long_backs
    assert lazy_move(view, G, 0, 0) == ("root", 1)
    assert lazy_move(view, G, 0, 3) == ("guard parent", 1 << view.parent[3])
    x = next(iter(view.thread_of))
    assert lazy_move(view, G, 0, x) == ("surround", G.adj[x])
    assert lazy_move(view, G, G.adj[x], x) == ("arrest", G.adj[x] | 1 << x)


@pytest.mark.parametrize(
    "params,code",
    [
        ((2, 2, 1, 2), "va_1"),
        ((2, 2, 2, 4), "va_2"),
        ((2, 3, 2, 4), "va_2"),
        ((2, 2, 3, 6), "va_3"),
        ((2, 2, 1, 2), "vl_1"),
        ((2, 2, 1, 3), "vl_2"),
        ((2, 3, 1, 4), "vl_3"),
    ],
)
def test_three_cops_win(params, code):
    G = gen_backpath_tree(*params)
    strat = scenario_strategy(G, V(code))
    verdict = verify_strategy(G, V(code), strat, 3)
    assert verdict.cops_win, verdict.stats.get("failure")
    assert verdict.stats["width"] == 3


def test_matches_solver_on_small_tree():
    G = gen_backpath_tree(2, 2, 1, 2)
    assert copwidth(G, V("va_1")).k == 3


def test_needs_labels():
    with pytest.raises(LabelError):
        read_tree(gen_ia_gap(1, 1, 4))


def test_plain_visible_only():
    with pytest.raises(ValueError):
        scenario_strategy((2, 2, 1, 2), V("cm-va_1"))
