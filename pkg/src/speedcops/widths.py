"""Exact path-width and tree-width by dynamic programming over vertex subsets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .budget import Budget, BudgetExceeded, as_budget
from .graph import INF, Graph, bits, bounded_reach

MAX_VERTICES = 18


@dataclass(frozen=True)
class Decomposition:
    """``order`` is a vertex-separation layout (path) or elimination order (tree)."""

    kind: str
    order: tuple[int, ...]
    width: int

    def replay(self, G: Graph) -> int:
        if self.kind == "path":
            return vertex_separation(G, self.order)
        return elimination_width(G, self.order)


def _boundary(G: Graph, X: int) -> int:
    """Members of X with a neighbor outside X."""
    return sum(1 for v in bits(X) if G.adj[v] & ~X)


def vertex_separation(G: Graph, order: Sequence[int]) -> int:
    X = 0
    worst = 0
    for v in order:
        X |= 1 << v
        worst = max(worst, _boundary(G, X))
    return worst


def elimination_width(G: Graph, order: Sequence[int]) -> int:
    """Largest neighborhood met while eliminating vertices in ``order``."""
    adj = list(G.adj)
    worst = 0
    alive = G.full
    for v in order:
        nb = adj[v] & alive & ~(1 << v)
        worst = max(worst, nb.bit_count())
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
    return worst


def _guard(G: Graph, max_vertices: int) -> None:
    if G.n > max_vertices:
        raise BudgetExceeded(f"{G.n} vertices exceed the subset-DP limit of {max_vertices}")


def pathwidth(G: Graph, max_vertices: int = MAX_VERTICES, budget: Budget | int | None = None) -> tuple[int, Decomposition]:
    """pw(G) as the vertex separation number, with an optimal layout."""
    _guard(G, max_vertices)
    budget = as_budget(budget)
    size = 1 << G.n
    best = [0] * size
    last = [-1] * size
    for X in range(1, size):
        budget.spend()
        top, choice = G.n + 1, -1
        for v in bits(X):
            if best[X & ~(1 << v)] < top:
                top, choice = best[X & ~(1 << v)], v
        best[X] = max(top, _boundary(G, X))
        last[X] = choice
    order = _unwind(last, size - 1)
    return best[size - 1], Decomposition("path", order, best[size - 1])


def treewidth(G: Graph, max_vertices: int = MAX_VERTICES, budget: Budget | int | None = None) -> tuple[int, Decomposition]:
    """tw(G) by the elimination-set recurrence, with an optimal elimination order.

    ``q(S, v)`` counts vertices outside S + v reachable from v through S; it is
    the degree of v when the vertices of S are eliminated first.
    """
    _guard(G, max_vertices)
    budget = as_budget(budget)
    if G.n == 0:
        return 0, Decomposition("tree", (), 0)
    size = 1 << G.n
    best = [0] * size
    last = [-1] * size
    for X in range(1, size):
        budget.spend()
        top, choice = G.n + 1, -1
        for v in bits(X):
            rest = X & ~(1 << v)
            cost = best[rest]
            if cost >= top:
                continue
            region = bounded_reach(G, G.full & ~rest & ~(1 << v), 1 << v, INF) | (1 << v)
            q = (G.neighborhood(region) & ~X).bit_count()
            cost = max(cost, q)
            if cost < top:
                top, choice = cost, v
        best[X], last[X] = top, choice
    order = _unwind(last, size - 1)
    return best[size - 1], Decomposition("tree", order, best[size - 1])


def _unwind(last: list[int], X: int) -> tuple[int, ...]:
    order = []
    while X:
        order.append(last[X])
        X &= ~(1 << last[X])
    return tuple(reversed(order))
