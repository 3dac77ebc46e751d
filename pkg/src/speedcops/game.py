"""Round semantics shared by every variant.

A round: the cops announce their next positions ``S_new``; the cops on
``S_old & S_new`` stay put and block, everybody else is in the air. The
robber then runs along a path of length at most ``s`` avoiding the blockers
and is caught if he ends on a vertex of ``S_new``. A lazy robber only runs
when a cop is announced onto his vertex. Invisible play tracks the set of
possible robber positions instead of the robber.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Sequence

from .graph import INF, Graph, Speed, bounded_reach, format_speed, parse_speed

MONOTONE = ("none", "robber", "cop")
_PREFIX = {"none": "", "robber": "rm-", "cop": "cm-"}


@dataclass(frozen=True)
class VariantSpec:
    """Visibility, activity, speed and monotonicity of a game.

    ``lenient`` only affects robber-monotone games: by default a robber who
    reaches a formerly occupied vertex breaks monotonicity even when a cop
    lands there in the same round; lenient play lets that capture count.
    """

    visible: bool
    lazy: bool
    speed: Speed = INF
    monotone: str = "none"
    lenient: bool = False

    def __post_init__(self) -> None:
        if self.monotone not in MONOTONE:
            raise ValueError(f"monotone must be one of {MONOTONE}")
        object.__setattr__(self, "speed", parse_speed(self.speed))

    @property
    def code(self) -> str:
        base = ("v" if self.visible else "i") + ("l" if self.lazy else "a")
        tail = "+lenient" if self.lenient and self.monotone == "robber" else ""
        return f"{_PREFIX[self.monotone]}{base}_{format_speed(self.speed)}{tail}"

    def __str__(self) -> str:
        return self.code

    def with_speed(self, s: Speed) -> VariantSpec:
        return replace(self, speed=s)

    def with_monotone(self, monotone: str) -> VariantSpec:
        return replace(self, monotone=monotone)

    @classmethod
    def parse(cls, code: str, speed: Speed | str | None = None) -> VariantSpec:
        """Parse codes such as ``va_1``, ``rm-il_inf+lenient`` or ``cm-vl`` (with ``speed``)."""
        m = re.fullmatch(r"(rm-|cm-)?([vi])([al])(?:_([0-9]+|inf|oo|∞))?(\+lenient)?", code.strip())
        if not m:
            raise ValueError(f"cannot parse variant {code!r}")
        mono = {"rm-": "robber", "cm-": "cop", None: "none"}[m.group(1)]
        s = m.group(4) if m.group(4) is not None else speed
        return cls(
            visible=m.group(2) == "v",
            lazy=m.group(3) == "l",
            speed=parse_speed(s if s is not None else "inf"),
            monotone=mono,
            lenient=bool(m.group(5)) and mono == "robber",
        )


@dataclass(frozen=True)
class SearchState:
    """Cops, robber knowledge and the history needed by monotone rules.

    ``robber`` is set in visible play, ``contamination`` in invisible play.
    ``cleared`` is every vertex that has held a cop so far.
    """

    cops: int
    robber: int | None = None
    contamination: int | None = None
    cleared: int = 0
    round: int = 0

    @property
    def vacated(self) -> int:
        return self.cleared & ~self.cops

    @property
    def knowledge(self) -> int:
        return self.robber if self.robber is not None else self.contamination


class Outcome(NamedTuple):
    kind: str  # caught, cleared or violated
    round: int


class IllegalMove(ValueError):
    pass


def initial_state(G: Graph, variant: VariantSpec, robber: int | None = None) -> SearchState:
    if variant.visible:
        if robber is None or not 0 <= robber < G.n:
            raise IllegalMove("visible play needs a start vertex for the robber")
        return SearchState(cops=0, robber=robber)
    return SearchState(cops=0, contamination=G.full)


def robber_options(G: Graph, variant: VariantSpec, S_old: int, S_new: int, r: int) -> tuple[int, int]:
    """Where the robber may end the round, and which of those are captures."""
    if S_old >> r & 1:
        raise IllegalMove(f"robber on occupied vertex {r}")
    if variant.lazy and not S_new >> r & 1:
        dest = 1 << r
    else:
        dest = bounded_reach(G, S_old & S_new, 1 << r, variant.speed)
    return dest, dest & S_new


def spill(G: Graph, variant: VariantSpec, S_old: int, S_new: int, R: int) -> int:
    """Possible robber positions after moving, before removing captures."""
    pers = S_old & S_new
    if variant.lazy:
        return (R & ~S_new) | bounded_reach(G, pers, R & S_new, variant.speed)
    return bounded_reach(G, pers, R, variant.speed)


def spread(G: Graph, variant: VariantSpec, S_old: int, S_new: int, R: int) -> int:
    """Contamination after the cops move from ``S_old`` to ``S_new``."""
    if R & S_old:
        raise IllegalMove("contamination overlaps the current cops")
    return spill(G, variant, S_old, S_new, R) & ~S_new


def violates(variant: VariantSpec, reached: int, cleared: int, S_new: int) -> bool:
    """Does reaching ``reached`` break robber-monotonicity?"""
    if variant.monotone != "robber":
        return False
    if variant.lenient:
        reached &= ~S_new
    return bool(reached & cleared)


def step(
    G: Graph,
    variant: VariantSpec,
    state: SearchState,
    ann: int,
    robber_choice: int | None = None,
    k: int | None = None,
) -> SearchState | Outcome:
    """Play one round. Returns the next state or a terminal outcome."""
    if ann & ~G.full:
        raise IllegalMove("announcement leaves the vertex range")
    if k is not None and ann.bit_count() > k:
        raise IllegalMove(f"announcement uses {ann.bit_count()} > {k} cops")
    if variant.monotone == "cop" and ann & state.vacated:
        raise IllegalMove("cop-monotone play may not return to a vacated vertex")
    t = state.round + 1
    if variant.visible:
        dest, capt = robber_options(G, variant, state.cops, ann, state.robber)
        if robber_choice is None:
            if dest & ~ann:
                raise IllegalMove("robber has a choice; robber_choice required")
            robber_choice = (dest & -dest).bit_length() - 1
        if not dest >> robber_choice & 1:
            raise IllegalMove(f"robber cannot reach {robber_choice}")
        if violates(variant, 1 << robber_choice, state.cleared, ann):
            return Outcome("violated", t)
        if ann >> robber_choice & 1:
            return Outcome("caught", t)
        return SearchState(ann, robber_choice, None, state.cleared | ann, t)
    reached = spill(G, variant, state.cops, ann, state.contamination)
    if violates(variant, reached, state.cleared, ann):
        return Outcome("violated", t)
    R = reached & ~ann
    if not R:
        return Outcome("cleared", t)
    return SearchState(ann, None, R, state.cleared | ann, t)


@dataclass
class TraceRow:
    round: int
    cops: int
    contamination: int
    recontaminated: int


@dataclass
class Trace:
    rows: list[TraceRow] = field(default_factory=list)
    width: int = 0
    outcome: Outcome | None = None

    @property
    def recontamination_rounds(self) -> list[int]:
        return [row.round for row in self.rows if row.recontaminated]

    def describe(self) -> str:
        kind = self.outcome.kind if self.outcome else "evaded"
        at = f"@{self.outcome.round}" if self.outcome else ""
        return f"{kind}{at}"


def simulate_script(
    G: Graph, variant: VariantSpec, script: Sequence[int], settle_first: bool = False
) -> Trace:
    """Replay a fixed sequence of announcements in invisible play.

    With ``settle_first`` the cops landing on clean vertices arrive before
    the others, so they block in the round they are placed. This is the
    same as inserting, before each row, a round that keeps the staying cops
    and adds the cops bound for clean vertices.

    A row is flagged as recontaminating when a vertex that held a cop
    before that row becomes contaminated again.
    """
    if variant.visible:
        raise ValueError("scripts are only meaningful in invisible play")
    trace = Trace()
    prev_cops, R, cleared = 0, G.full, 0
    for i, ann in enumerate(script, start=1):
        trace.width = max(trace.width, ann.bit_count())
        if variant.monotone == "cop" and ann & cleared & ~prev_cops:
            raise IllegalMove(f"row {i} returns to a vacated vertex")
        old = prev_cops
        if settle_first:
            settled = (prev_cops & ann) | (ann & ~R)
            if settled != prev_cops:
                R = spread(G, variant, prev_cops, settled, R)
                old = settled
        reached = spill(G, variant, old, ann, R)
        if violates(variant, reached, cleared, ann):
            trace.outcome = Outcome("violated", i)
            return trace
        fresh = reached & ~ann & cleared & ~R
        R = reached & ~ann
        trace.rows.append(TraceRow(i, ann, R, fresh))
        cleared |= ann
        prev_cops = ann
        if not R:
            trace.outcome = Outcome("cleared", i)
            return trace
    return trace
