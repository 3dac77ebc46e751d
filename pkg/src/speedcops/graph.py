"""Graphs over vertices 0..n-1 with bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``v`` is set when ``v`` is a member.
Python integers give union (``|``), intersection (``&``), difference
(``a & ~b``) and popcount (``int.bit_count``) for free.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

INF = math.inf

Speed = int | float


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    return list(bits(mask))


def parse_speed(text: str | int | float) -> Speed:
    """Accept ``"inf"``, ``"oo"``, ``"∞"`` or a positive integer."""
    if isinstance(text, (int, float)):
        value = text
    else:
        t = text.strip().lower()
        if t in ("inf", "infinity", "oo", "∞"):
            return INF
        value = int(t)
    if value != INF and (value < 1 or int(value) != value):
        raise ValueError(f"speed must be a positive integer or inf, got {text!r}")
    return INF if value == INF else int(value)


def format_speed(s: Speed) -> str:
    return "inf" if s == INF else str(int(s))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor mask of ``v``."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    full: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if nb >> self.n:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match n")
        object.__setattr__(self, "full", (1 << self.n) - 1)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), None if labels is None else tuple(labels))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return "" if self.labels is None else self.labels[v]

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, None if labels is None else tuple(labels))

    def neighborhood(self, mask: int) -> int:
        """Union of the neighbor masks of the members of ``mask``."""
        out = 0
        adj = self.adj
        while mask:
            low = mask & -mask
            out |= adj[low.bit_length() - 1]
            mask ^= low
        return out


def bounded_reach(G: Graph, forbidden: int, sources: int, s: Speed) -> int:
    """Vertices joined to a source by a path of length <= s avoiding ``forbidden``.

    Path endpoints must avoid ``forbidden`` as well, so forbidden sources
    contribute nothing.
    """
    allowed = G.full & ~forbidden
    seen = sources & allowed
    frontier = seen
    adj = G.adj
    depth = 0
    while frontier and depth < s:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
        depth += 1
    return seen


def cut(G: Graph, S: int) -> int:
    """Vertices outside ``S`` with a neighbor in ``S``."""
    return G.neighborhood(S) & ~S


def components(G: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within`` (default V)."""
    rest = G.full if within is None else within
    out = []
    while rest:
        comp = bounded_reach(G, ~rest & G.full, rest & -rest, INF)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(G: Graph, within: int | None = None) -> bool:
    return len(components(G, within)) <= 1


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format or the JSON object format."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _parse_text(text: str) -> Graph:
    n = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        _check_edge(n, u, v, seen, lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing header 'n <count>'", 1)
    return Graph.from_edges(n, edges)


def _check_edge(n: int, u: int, v: int, seen: set, where: int | None) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"vertex out of range in edge ({u}, {v})", where)
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}", where)
    key = (min(u, v), max(u, v))
    if key in seen:
        raise GraphFormatError(f"duplicate edge ({u}, {v})", where)
    seen.add(key)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, exc.lineno) from None
    if "graph" in obj and isinstance(obj["graph"], dict):
        obj = obj["graph"]
    if not isinstance(obj.get("n"), int) or obj["n"] < 0:
        raise GraphFormatError("object needs a non-negative integer 'n'")
    n = obj["n"]
    seen: set[tuple[int, int]] = set()
    edges = []
    lines = text.splitlines()
    for i, e in enumerate(obj.get("edges", [])):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"edge #{i} is not a pair of integers", _locate(lines, i))
        try:
            _check_edge(n, e[0], e[1], seen, None)
        except GraphFormatError as exc:
            raise GraphFormatError(f"edge #{i}: {exc}", _locate(lines, i)) from None
        edges.append((e[0], e[1]))
    labels = obj.get("labels")
    if labels is not None and (len(labels) != n or not all(isinstance(x, str) for x in labels)):
        raise GraphFormatError("'labels' must be a list of n strings")
    return Graph.from_edges(n, edges, labels)


def _locate(lines: list[str], index: int) -> int | None:
    # serialize_graph writes one edge per line, which makes this exact for our own files
    start = next((i for i, ln in enumerate(lines) if '"edges"' in ln), None)
    if start is None or len(lines) == 1:
        return 1 if len(lines) == 1 else None
    return start + 2 + index


def serialize_graph(G: Graph, fmt: str = "text") -> str:
    """Deterministic serialization; edges sorted lexicographically."""
    edges = G.edges()
    if fmt == "text":
        return "\n".join([f"n {G.n}"] + [f"{u} {v}" for u, v in edges]) + "\n"
    if fmt == "json":
        body = ",\n".join(f"    [{u}, {v}]" for u, v in edges)
        labels = "null" if G.labels is None else json.dumps(list(G.labels))
        return f'{{\n  "n": {G.n},\n  "edges": [\n{body}\n  ],\n  "labels": {labels}\n}}\n'
    raise ValueError(f"unknown format {fmt!r}")


def graph_io(data: str | Graph, direction: str = "parse", fmt: str = "text") -> Graph | str:
    if direction == "parse":
        assert isinstance(data, str)
        return parse_graph(data)
    if direction == "serialize":
        assert isinstance(data, Graph)
        return serialize_graph(data, fmt)
    raise ValueError(f"unknown direction {direction!r}")


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
