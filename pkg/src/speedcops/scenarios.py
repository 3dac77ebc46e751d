"""Three-cop strategies for the back-path trees of ``gen_backpath_tree``.

The tree is read off the labels: core vertices, ``path`` vertices
subdividing tree edges and ``back`` vertices on the paths from a core vertex
up to each ancestor. Every non-core vertex lies on a *thread*, the chain of
degree-two vertices between two core endpoints.

Active robber, by where the robber stands:

* core vertex: occupy it and its parent (A, C, E);
* tree thread: occupy the lower endpoint, keep or add the upper one and add
  the grandparent while the upper one is unguarded (A, C);
* back thread with no guarded endpoint: occupy both endpoints (B);
* back thread with a guarded endpoint: add the other endpoint and the middle
  vertex (D);
* guarded on both sides along the thread: keep both walls and step one cop
  towards the robber (F).

Lazy robber: push him down the tree by occupying the parent of his vertex
and then the vertex; on a thread occupy both neighbors, then the vertex.
"""
from __future__ import annotations

from dataclasses import dataclass

from .game import SearchState, VariantSpec
from .generators import gen_backpath_tree
from .graph import Graph, bits
from .solver import CopStrategy, StrategyUndefined


class LabelError(ValueError):
    """The graph does not look like a back-path tree."""


@dataclass(frozen=True)
class Thread:
    ends: tuple[int, int]  # (upper, lower) core endpoints
    inner: tuple[int, ...]  # from the upper end down
    kind: str  # "path" or "back"


@dataclass
class TreeView:
    parent: list[int]
    thread_of: dict[int, Thread]


def read_tree(G: Graph) -> TreeView:
    if G.labels is None:
        raise LabelError("graph carries no labels")
    core = [v for v in range(G.n) if G.labels[v] == "core"]
    if not core or core != list(range(len(core))):
        raise LabelError("core vertices must come first")
    for v in range(len(core), G.n):
        if G.labels[v] not in ("path", "back"):
            raise LabelError(f"unexpected label {G.labels[v]!r} at {v}")
        if G.degree(v) != 2:
            raise LabelError(f"thread vertex {v} must have degree 2")
    ncore = len(core)
    thread_of: dict[int, Thread] = {}
    tree_nb: list[set[int]] = [set() for _ in core]
    for v in core:
        for u in bits(G.adj[v]):
            if u < ncore:
                tree_nb[v].add(u)
    for x in range(ncore, G.n):
        if x in thread_of:
            continue
        chain = [x]
        ends = []
        for first in bits(G.adj[x]):
            prev, cur = x, first
            side = []
            while cur >= ncore:
                side.append(cur)
                prev, cur = cur, next(u for u in bits(G.adj[cur]) if u != prev)
            ends.append((cur, side))
        (a, left), (b, right) = ends
        chain = left[::-1] + chain + right
        if a > b:
            a, b = b, a
            chain.reverse()
        kinds = {G.labels[y] for y in chain}
        if len(kinds) != 1:
            raise LabelError(f"thread through {x} mixes labels")
        th = Thread((a, b), tuple(chain), kinds.pop())
        for y in chain:
            thread_of[y] = th
        if th.kind == "path":
            tree_nb[a].add(b)
            tree_nb[b].add(a)
    parent = [-1] * ncore
    for v in range(1, ncore):
        ups = [u for u in tree_nb[v] if u < v]
        if len(ups) != 1:
            raise LabelError(f"core vertex {v} has {len(ups)} tree parents")
        parent[v] = ups[0]
    return TreeView(parent, thread_of)


def _walls(view: TreeView, S: int, x: int) -> tuple[int | None, int | None, list[int]]:
    """Nearest guarded vertices above and below x on its thread."""
    th = view.thread_of[x]
    line = [th.ends[0], *th.inner, th.ends[1]]
    i = line.index(x)
    up = next((j for j in range(i - 1, -1, -1) if S >> line[j] & 1), None)
    down = next((j for j in range(i + 1, len(line)) if S >> line[j] & 1), None)
    return up, down, line


def _mask(*vs: int) -> int:
    m = 0
    for v in vs:
        if v >= 0:
            m |= 1 << v
    return m


def active_move(view: TreeView, S: int, r: int) -> tuple[str, int]:
    """Scenario letter and announcement against an active robber on r."""
    parent = view.parent
    if r < len(parent):
        p = parent[r]
        return ("C/E" if p >= 0 and S >> p & 1 else "A"), _mask(r, p)
    up, down, line = _walls(view, S, r)
    if up is not None and down is not None:
        return "F", _mask(line[up], line[down], line[up + 1])
    th = view.thread_of[r]
    top, bottom = th.ends
    if th.kind == "path":
        if S >> top & 1:
            return "C", _mask(top, bottom)
        return "A", _mask(top, parent[top], bottom)
    if not (S >> top & 1 or S >> bottom & 1):
        return "B", _mask(top, bottom)
    middle = line[(len(line) - 1) // 2]
    return "D", _mask(top, bottom, middle)


def lazy_move(view: TreeView, G: Graph, S: int, r: int) -> tuple[str, int]:
    """Announcement against a lazy robber on r."""
    parent = view.parent
    if r < len(parent):
        p = parent[r]
        if p < 0:
            return "root", _mask(r)
        if S >> p & 1:
            return "descend", _mask(p, r)
        return "guard parent", _mask(p)
    nb = G.adj[r]
    if nb & ~S:
        return "surround", nb
    return "arrest", nb | 1 << r


def scenario_strategy(G: Graph | tuple[int, int, int, int], variant: VariantSpec) -> CopStrategy:
    """Three-cop strategy for a back-path tree, given the graph or its parameters.

    The variant must be plain visible play; the rule covers both the active
    and the lazy robber.
    """
    if isinstance(G, tuple):
        G = gen_backpath_tree(*G)
    if not variant.visible or variant.monotone != "none":
        raise ValueError("scenario strategies are for plain visible play")
    view = read_tree(G)

    def rule(state: SearchState) -> int:
        if state.robber is None:
            raise StrategyUndefined(state)
        if variant.lazy:
            return lazy_move(view, G, state.cops, state.robber)[1]
        return active_move(view, state.cops, state.robber)[1]

    name = "backpath-lazy" if variant.lazy else "backpath-active"
    return CopStrategy(variant, 3, rule=rule, name=name)
