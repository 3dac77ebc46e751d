"""Layout parameters (degeneracy, wcol, scol, adm, sdeg) and hideouts.

Counts are strict: only vertices ``w`` before ``v`` are counted, so the
copwidth identities read ``copwidth = parameter + 1``.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from .budget import Budget, as_budget
from .graph import INF, Graph, Speed, bits, bounded_reach

KINDS = ("degeneracy", "wcol", "scol", "adm", "sdeg")

Layout = tuple[int, ...]


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown parameter kind {kind!r}; expected one of {KINDS}")


def _shortest_path_to(G: Graph, v: int, targets: int, forbidden: int, s: Speed) -> list[int] | None:
    """A shortest path from v to a target of length <= s, or None.

    Targets are not traversed: a path through a target has a shorter prefix
    that already ends in one.
    """
    parent = {v: -1}
    frontier = [v]
    depth = 0
    blocked = forbidden | (1 << v)
    seen = blocked
    while frontier and depth < s:
        nxt = []
        for u in frontier:
            nb = G.adj[u] & ~seen
            for w in bits(nb):
                parent[w] = u
                if targets >> w & 1:
                    path = [w]
                    while parent[path[-1]] != -1:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(w)
            seen |= nb
        frontier = nxt
        depth += 1
    return None


def min_blocker_size(
    G: Graph, v: int, targets: int, s: Speed, limit: int | None = None, budget: Budget | None = None
) -> int:
    """Smallest |A|, A ⊆ V∖{v}, with no path of length <= s from v to a target in G∖A.

    Targets themselves may go into A. With ``limit`` the search stops early
    and returns ``limit + 1`` when no blocker of size <= limit exists.
    """
    targets &= ~(1 << v)
    cap = G.n if limit is None else limit

    def feasible(forbidden: int, left: int) -> bool:
        if budget is not None:
            budget.spend()
        path = _shortest_path_to(G, v, targets, forbidden, s)
        if path is None:
            return True
        if left == 0:
            return False
        return any(feasible(forbidden | (1 << u), left - 1) for u in path[1:])

    for size in range(cap + 1):
        if feasible(0, size):
            return size
    return cap + 1


def blocks(G: Graph, v: int, targets: int, blocker: int, s: Speed) -> bool:
    return not bounded_reach(G, blocker, 1 << v, s) & targets & ~(1 << v)


def least_min_blocker(G: Graph, v: int, targets: int, s: Speed, limit: int) -> tuple[int, ...] | None:
    """Lexicographically least blocker of minimum size, if that size is <= limit."""
    size = min_blocker_size(G, v, targets, s, limit)
    if size > limit:
        return None
    pool = [u for u in range(G.n) if u != v]
    for combo in itertools.combinations(pool, size):
        mask = 0
        for u in combo:
            mask |= 1 << u
        if blocks(G, v, targets, mask, s):
            return combo
    raise AssertionError("minimum blocker vanished")


def _adm_count(G: Graph, v: int, pred: int, s: Speed) -> int:
    """Most paths of length <= s from v into pred, disjoint apart from v."""
    above = G.full & ~pred & ~(1 << v)
    found: set[int] = set()
    stack = [(v, 0, 0)]
    while stack:
        u, used, length = stack.pop()
        nb = G.adj[u] & ~used & ~(1 << v)
        for w in bits(nb & pred):
            found.add(used | (1 << w))
        if length + 1 < s:
            for w in bits(nb & above):
                stack.append((w, used | (1 << w), length + 1))
    paths = sorted(found, key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for m in paths:
        if not any(p & m == p for p in minimal):
            minimal.append(m)
    bound = min(G.degree(v), pred.bit_count())
    best = 0

    def pack(cands: list[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        if best >= bound or count + len(cands) <= best:
            return
        first = cands[0]
        pivot = first & -first
        with_pivot = [c for c in cands if c & pivot]
        without = [c for c in cands if not c & pivot]
        for c in with_pivot:
            pack([d for d in without if not d & c], count + 1)
        if without:
            pack(without, count)

    if minimal:
        pack(minimal, 0)
    return best


def eval_pred(G: Graph, v: int, pred: int, s: Speed, kind: str) -> int:
    """Evaluate a kind that depends only on the predecessor set of v."""
    if kind == "degeneracy" or s == 1:
        return (G.adj[v] & pred).bit_count()
    if kind == "scol":
        inside = bounded_reach(G, pred, 1 << v, s - 1)
        return (G.neighborhood(inside) & pred).bit_count()
    if kind == "adm":
        return _adm_count(G, v, pred, s)
    if kind == "sdeg":
        return min_blocker_size(G, v, pred, s)
    raise ValueError(f"{kind} depends on the order of predecessors")


def _wcol_count(G: Graph, v: int, order: Sequence[int], pos: int, s: Speed) -> int:
    count = 0
    lower = 0
    for i in range(pos):
        w = order[i]
        if bounded_reach(G, lower, 1 << v, s) >> w & 1:
            count += 1
        lower |= 1 << w
    return count


def eval_vertex(G: Graph, layout: Sequence[int], v: int, s: Speed, kind: str) -> int:
    """Number of predecessors of v counted by ``kind`` at speed s."""
    _check_kind(kind)
    pos = list(layout).index(v)
    if kind == "wcol" and s != 1:
        return _wcol_count(G, v, layout, pos, s)
    pred = 0
    for w in layout[:pos]:
        pred |= 1 << w
    return eval_pred(G, v, pred, s, kind)


def layout_value(G: Graph, layout: Sequence[int], s: Speed, kind: str) -> int:
    if sorted(layout) != list(range(G.n)):
        raise ValueError("layout is not a permutation of the vertices")
    return max((eval_vertex(G, layout, v, s, kind) for v in layout), default=0)


def degeneracy_order(G: Graph) -> tuple[int, Layout]:
    """Min-degree peeling; the layout lists vertices in reverse removal order."""
    alive = G.full
    removed = []
    value = 0
    while alive:
        v = min(bits(alive), key=lambda u: ((G.adj[u] & alive).bit_count(), u))
        value = max(value, (G.adj[v] & alive).bit_count())
        removed.append(v)
        alive &= ~(1 << v)
    return value, tuple(reversed(removed))


def parameter(G: Graph, s: Speed, kind: str, budget: Budget | int | None = None) -> tuple[int, Layout]:
    """Exact minimum over layouts of the largest per-vertex count, with a witness."""
    _check_kind(kind)
    if G.n == 0:
        return 0, ()
    if kind == "degeneracy" or s == 1:
        return degeneracy_order(G)
    budget = as_budget(budget)
    if kind == "wcol":
        return _wcol_search(G, s, budget)
    return _subset_dp(G, s, kind, budget)


def _subset_dp(G: Graph, s: Speed, kind: str, budget: Budget) -> tuple[int, Layout]:
    # best[X]: optimum over layouts whose first |X| vertices are X
    size = 1 << G.n
    best = [0] * size
    last = [-1] * size
    for X in range(1, size):
        budget.spend(X.bit_count())
        top = G.n + 1
        choice = -1
        for v in bits(X):
            rest = X & ~(1 << v)
            cost = best[rest]
            if cost >= top:
                continue
            cost = max(cost, eval_pred(G, v, rest, s, kind))
            if cost < top:
                top, choice = cost, v
        best[X], last[X] = top, choice
    order = []
    X = size - 1
    while X:
        order.append(last[X])
        X &= ~(1 << last[X])
    return best[size - 1], tuple(reversed(order))


def _wcol_search(G: Graph, s: Speed, budget: Budget) -> tuple[int, Layout]:
    seeds = [tuple(range(G.n)), degeneracy_order(G)[1]]
    best_order = min(seeds, key=lambda o: (layout_value(G, o, s, "wcol"), o))
    best = layout_value(G, best_order, s, "wcol")
    order: list[int] = []

    def extend(placed: int, worst: int) -> None:
        nonlocal best, best_order
        if len(order) == G.n:
            if worst < best:
                best, best_order = worst, tuple(order)
            return
        for v in range(G.n):
            if placed >> v & 1:
                continue
            budget.spend()
            cost = max(worst, _wcol_count(G, v, order + [v], len(order), s))
            if cost >= best:
                continue
            order.append(v)
            extend(placed | (1 << v), cost)
            order.pop()

    extend(0, 0)
    return best, best_order


def is_hideout(G: Graph, U: int, k: int, s: Speed) -> bool:
    """Every v in U needs at least k blockers to be cut off from U∖{v}."""
    return all(min_blocker_size(G, v, U, s, limit=k - 1) >= k for v in bits(U)) if k > 0 else True


def max_hideout(G: Graph, k: int, s: Speed) -> int:
    """The largest (k, s)-hideout, by deleting vertices that are easy to cut off."""
    U = G.full
    if k <= 0:
        return U
    changed = True
    while changed:
        changed = False
        for v in bits(U):
            if min_blocker_size(G, v, U, s, limit=k - 1) < k:
                U &= ~(1 << v)
                changed = True
    return U


def sdeg_from_hideouts(G: Graph, s: Speed) -> int:
    """Largest k with a nonempty (k, s)-hideout; an independent route to sdeg."""
    k = 0
    while max_hideout(G, k + 1, s):
        k += 1
    return k


__all__ = [
    "INF",
    "KINDS",
    "Layout",
    "degeneracy_order",
    "eval_vertex",
    "is_hideout",
    "layout_value",
    "max_hideout",
    "min_blocker_size",
    "parameter",
]
