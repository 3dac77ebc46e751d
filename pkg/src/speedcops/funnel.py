"""Funnels: target maps that compile to cop-monotone strategies.

A funnel on a domain A maps each a in A to a connected target set F(a)
inside A that contains a, such that b in F(a) - {a} never has a in F(b).
Its width is the largest boundary |cut(F(a))|. A funnel is monotone when
targets nest (b in F(a) implies F(b) inside F(a)); a monotone funnel on all
of V tells width + 1 cops how to corner a lazy robber of unbounded speed
without ever returning to a vacated vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .game import SearchState, VariantSpec
from .graph import INF, Graph, bits, bounded_reach, cut, is_connected, to_mask
from .layout import least_min_blocker, max_hideout
from .solver import CopStrategy, StrategyUndefined

FUNNEL_VARIANT = VariantSpec(visible=True, lazy=True, speed=INF, monotone="cop")


@dataclass
class Funnel:
    targets: dict[int, int]

    @property
    def domain(self) -> int:
        m = 0
        for a in self.targets:
            m |= 1 << a
        return m

    def width(self, G: Graph) -> int:
        return max((cut(G, F).bit_count() for F in self.targets.values()), default=0)

    def to_json(self) -> dict[str, list[int]]:
        return {str(a): list(bits(F)) for a, F in sorted(self.targets.items())}

    @classmethod
    def from_json(cls, data: dict) -> Funnel:
        targets = {}
        for a, members in data.items():
            m = 0
            for v in members:
                m |= 1 << int(v)
            targets[int(a)] = m
        return cls(targets)


@dataclass
class FunnelCheck:
    status: str  # invalid, valid or monotone
    width: int | None = None
    reason: str | None = None
    witness: tuple = ()

    @property
    def ok(self) -> bool:
        return self.status != "invalid"


def check_funnel(G: Graph, fun: Funnel) -> FunnelCheck:
    """Check the funnel rules directly; the first broken rule is reported."""
    A = fun.domain
    T = fun.targets
    for a, F in T.items():
        if not 0 <= a < G.n:
            return FunnelCheck("invalid", reason="vertex out of range", witness=(a,))
        if F & ~A:
            return FunnelCheck("invalid", reason="F1: target leaves the domain", witness=(a,))
        if not F >> a & 1:
            return FunnelCheck("invalid", reason="F1: a not in F(a)", witness=(a,))
    for a, F in T.items():
        for b in bits(F & ~(1 << a)):
            if T[b] >> a & 1:
                return FunnelCheck("invalid", reason=f"F2: {b} in F({a}) and {a} in F({b})", witness=(a, b))
    for a, F in T.items():
        if not is_connected(G, F):
            return FunnelCheck("invalid", reason=f"F3: F({a}) is disconnected", witness=(a,))
    width = fun.width(G)
    for a, F in T.items():
        for b in bits(F):
            if T[b] & ~F:
                return FunnelCheck("valid", width, f"F4: F({b}) not inside F({a})", (a, b))
    return FunnelCheck("monotone", width)


def funnel_strategy(G: Graph, fun: Funnel) -> CopStrategy:
    """Guard cut(F(r)); once the guards stand, step onto the robber as well."""
    check = check_funnel(G, fun)
    if check.status != "monotone":
        raise ValueError(f"funnel is not monotone: {check.reason}")
    if fun.domain != G.full:
        raise ValueError("funnel must cover every vertex")
    guards = {a: cut(G, F) for a, F in fun.targets.items()}

    def rule(state: SearchState) -> int:
        r = state.robber
        if r is None:
            raise StrategyUndefined(state)
        C = guards[r]
        return C | (1 << r) if state.cops == C else C

    return CopStrategy(FUNNEL_VARIANT, check.width + 1, rule=rule, name="funnel")


@dataclass
class RepairStep:
    """One repair of the builder: grow F(x) by F(y), or shrink F(y) to F(x) & F(y)."""

    x: int
    y: int
    kind: str  # "grow" or "shrink"
    zone: int  # F(y) & cut(F(x))
    outer: int  # cut(F(x) | F(y)) - cut(F(x))
    identities: tuple[bool, bool, bool]


@dataclass
class FunnelBuild:
    funnel: Funnel | None
    hideout: int = 0
    repairs: list[RepairStep] = field(default_factory=list)

    @property
    def possible(self) -> bool:
        return self.funnel is not None


def _identities(G: Graph, Fx: int, Fy: int, zone: int, outer: int) -> tuple[bool, bool, bool]:
    cx, cy = cut(G, Fx), cut(G, Fy)
    union_cut = cut(G, Fx | Fy) == (cx & ~zone) | outer
    meet_cut = cut(G, Fx & Fy) & ~((cy & ~outer) | zone) == 0
    outer_in = outer & ~cy == 0
    return union_cut, meet_cut, outer_in


def build_monotone_funnel(
    G: Graph, k: int, pick_blocker: Callable[[Graph, int, int, int], int | None] | None = None
) -> FunnelBuild:
    """Grow a monotone funnel of width < k one vertex at a time, or report a hideout.

    Each new vertex x is the smallest one that fewer than k vertices can cut
    off from the rest of the undecided vertices; its target is its component
    after removing the lexicographically least minimum cut. Targets are then
    repaired until they nest again.

    ``pick_blocker(G, x, targets, k)`` may replace the default choice; it
    returns a mask of fewer than k vertices cutting x off from ``targets``,
    or None.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    T: dict[int, int] = {}
    A = 0
    repairs: list[RepairStep] = []
    while A != G.full:
        rest = G.full & ~A
        pick = pick_blocker or _least_blocker
        for x in bits(rest):
            blocker = pick(G, x, rest & ~(1 << x), k)
            if blocker is not None:
                break
        else:
            return FunnelBuild(None, max_hideout(G, k, INF), repairs)
        T[x] = bounded_reach(G, blocker, 1 << x, INF)
        A |= 1 << x
        _repair(G, T, x, k, repairs)
    return FunnelBuild(Funnel(T), 0, repairs)


def _least_blocker(G: Graph, x: int, targets: int, k: int) -> int | None:
    C = least_min_blocker(G, x, targets, INF, k - 1)
    return None if C is None else to_mask(C)


def _repair(G: Graph, T: dict[int, int], x: int, k: int, log: list[RepairStep]) -> None:
    while True:
        Fx = T[x]
        bad = [y for y in bits(Fx) if T[y] & ~Fx]
        if not bad:
            return
        y = min(bad, key=lambda b: (T[b].bit_count(), b))
        Fy = T[y]
        cx = cut(G, Fx)
        zone = Fy & cx
        outer = cut(G, Fx | Fy) & ~cx
        ids = _identities(G, Fx, Fy, zone, outer)
        if not all(ids):
            raise AssertionError(f"cut identities fail at x={x}, y={y}: {ids}")
        if outer.bit_count() <= zone.bit_count():
            T[x] = Fx | Fy
            kind = "grow"
        else:
            T[y] = Fx & Fy
            kind = "shrink"
        log.append(RepairStep(x, y, kind, zone, outer, ids))
        changed = T[x] if kind == "grow" else T[y]
        if cut(G, changed).bit_count() >= k:
            raise AssertionError(f"repair at x={x}, y={y} widened the funnel to {cut(G, changed).bit_count()}")
