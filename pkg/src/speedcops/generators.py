"""Graph families used as witnesses, and corpus enumeration."""
from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graph import Graph, is_connected


class _Builder:
    def __init__(self) -> None:
        self.labels: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, count: int, label: str) -> list[int]:
        start = len(self.labels)
        self.labels.extend([label] * count)
        return list(range(start, start + count))

    def clique(self, vs: list[int]) -> None:
        self.edges.extend(itertools.combinations(vs, 2))

    def join(self, xs: list[int], ys: list[int]) -> None:
        self.edges.extend((x, y) for x in xs for y in ys)

    def path(self, left: list[int], inner: list[int], right: list[int]) -> None:
        """Chain ``inner``; its ends attach to every vertex of ``left``/``right``."""
        if not inner:
            self.join(left, right)
            return
        self.join(left, inner[:1])
        self.edges.extend(zip(inner, inner[1:]))
        self.join(inner[-1:], right)

    def build(self) -> Graph:
        return Graph.from_edges(len(self.labels), self.edges, self.labels)


def gen_subdivided_clique(n: int, s: int) -> Graph:
    """K_n with every edge replaced by a path with ``s`` inner vertices."""
    if n < 2:
        raise ValueError("need n >= 2")
    if s < 0:
        raise ValueError("need s >= 0")
    b = _Builder()
    branch = b.add(n, "clique")
    for i, j in itertools.combinations(branch, 2):
        b.path([i], b.add(s, "path"), [j])
    return b.build()


def gen_ia_gap(s: int, g: int, n: int) -> Graph:
    """Cliques A (n-g), B (g), C (g); B and C fully joined to A; B x C paths.

    Every pair (b, c) gets its own path with 3s-2 inner vertices, labeled
    ``path:b-c``.
    """
    if s < 1 or g < 1:
        raise ValueError("need s >= 1 and g >= 1")
    if n < 2 * g + 2:
        raise ValueError("need n >= 2g + 2")
    bld = _Builder()
    A = bld.add(n - g, "A")
    B = bld.add(g, "B")
    C = bld.add(g, "C")
    for part in (A, B, C):
        bld.clique(part)
    bld.join(B, A)
    bld.join(C, A)
    for bv in B:
        for cv in C:
            bld.path([bv], bld.add(3 * s - 2, f"path:{bv}-{cv}"), [cv])
    return bld.build()


def gen_backpath_tree(arity: int, depth: int, edge_len: int, back_len: int) -> Graph:
    """Complete tree of paths plus a back-path from every vertex to each ancestor.

    Core vertices come first in breadth-first order, then the inner vertices
    of tree edges (``path``), then back-path inner vertices (``back``).
    """
    if arity < 1 or depth < 1 or edge_len < 1:
        raise ValueError("need arity, depth, edge_len >= 1")
    if back_len < 2:
        raise ValueError("back paths need length >= 2")
    parent = [-1]
    level = [0]
    frontier = [0]
    for d in range(1, depth + 1):
        nxt = []
        for p in frontier:
            for _ in range(arity):
                parent.append(p)
                level.append(d)
                nxt.append(len(parent) - 1)
        frontier = nxt
    b = _Builder()
    b.add(len(parent), "core")
    for v in range(1, len(parent)):
        b.path([parent[v]], b.add(edge_len - 1, "path"), [v])
    for v in range(1, len(parent)):
        a = parent[v]
        while a >= 0:
            b.path([v], b.add(back_len - 1, "back"), [a])
            a = parent[a]
    return b.build()


def gen_recontamination(
    s: int,
    clique_a: int,
    clique_b: int,
    clique_c: int,
    path_multiplicity: int,
    connectors: int = 3,
    hub_paths: int = 1,
) -> Graph:
    """Three cliques A, B, C around a hub vertex.

    The hub reaches A and B through ``connectors`` vertices per side, each
    adjacent to the whole clique and to the hub (``connectors=0`` joins the
    hub to the cliques directly). ``path_multiplicity`` paths of length s
    run from A to C and from B to C, and ``hub_paths`` more from C to the
    hub; a path's end vertex is adjacent to every vertex of its clique.

    Vertex order: A, B, C, B-side connectors, A-side connectors, C-hub
    paths, A-C paths, B-C paths, hub. ``(4, 8, 8, 2, 4)`` is the 52-vertex
    instance replayed by :func:`speedcops.scripts.recontamination_script`.
    """
    if s < 4:
        raise ValueError("need s >= 4")
    if min(clique_a, clique_b, clique_c, path_multiplicity) < 1:
        raise ValueError("clique sizes and path multiplicity must be >= 1")
    if connectors < 0 or hub_paths < 1:
        raise ValueError("need connectors >= 0 and hub_paths >= 1")
    b = _Builder()
    A = b.add(clique_a, "clique:A")
    B = b.add(clique_b, "clique:B")
    C = b.add(clique_c, "clique:C")
    for part in (A, B, C):
        b.clique(part)
    con_b = b.add(connectors, "connector:B")
    con_a = b.add(connectors, "connector:A")
    hub_inner = [b.add(s - 1, "path:C-hub") for _ in range(hub_paths)]
    a_inner = [b.add(s - 1, "path:A-C") for _ in range(path_multiplicity)]
    b_inner = [b.add(s - 1, "path:B-C") for _ in range(path_multiplicity)]
    (hub,) = b.add(1, "hub")
    for x in con_b:
        b.join([x], B + [hub])
    for x in con_a:
        b.join([x], A + [hub])
    if connectors == 0:
        b.join([hub], A + B)
    for inner in hub_inner:
        b.path(C, inner, [hub])
    for inner in a_inner:
        b.path(A, inner, C)
    for inner in b_inner:
        b.path(B, inner, C)
    return b.build()


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on n vertices, by edge-set enumeration."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        G = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if is_connected(G):
            yield G


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) resampled until connected."""
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        G = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(G):
            return G
