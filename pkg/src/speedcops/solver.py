"""Exact solvers for "do k cops win this variant on G?".

Every variant has a reference search that follows the round rules
directly. Robber-monotone games (and the cop-monotone invisible active
game) also have smaller equivalent arenas, used by default and
cross-checked against the reference searches in the test suite:

* invisible active, robber- or cop-monotone: the contamination can never
  touch a cleared vertex, so every cleared neighbor of it must stay
  guarded and the game is the vertex-separation game on the contaminated
  set alone;
* invisible lazy, robber-monotone: cops may reshuffle inside the cleared
  zone for free, so only the contaminated set matters and one vertex is
  attacked at a time, guarded by the cleared vertices it reaches first;
* visible, robber-monotone: the cops only ever need the cleared vertices
  that the robber reaches first, so states shrink to (robber, cleared).
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .budget import Budget, as_budget
from .game import SearchState, VariantSpec, initial_state, robber_options, step, violates
from .graph import Graph, bits, bounded_reach

WIN = "cops"
LOSE = "robber"


class StrategyUndefined(KeyError):
    """A strategy was asked for a move in a state it does not cover."""


def state_key(variant: VariantSpec, state: SearchState) -> tuple:
    if variant.monotone == "none":
        return (state.cops, state.knowledge)
    return (state.cops, state.knowledge, state.cleared)


@dataclass
class CopStrategy:
    """Positional cop strategy: a table of announcements, optionally backed by a rule."""

    variant: VariantSpec
    k: int
    table: dict = field(default_factory=dict)
    rule: Callable[[SearchState], int] | None = None
    name: str = "table"

    def announce(self, state: SearchState) -> int:
        key = state_key(self.variant, state)
        ann = self.table.get(key)
        if ann is not None:
            return ann
        if self.rule is None:
            raise StrategyUndefined(key)
        ann = self.rule(state)
        self.table[key] = ann
        return ann


@dataclass
class RobberStrategy:
    """Counter-strategy for the robber at a fixed number of cops.

    Visible play: ``reply(state, announcement)`` picks a destination and
    ``start`` is a vertex the cops cannot win from. Invisible play has no
    choices; the certificate is the claim that no script clears the graph.
    """

    variant: VariantSpec
    k: int
    start: int | None
    reply_fn: Callable[[SearchState, int], int] | None = None

    def reply(self, state: SearchState, ann: int) -> int:
        if self.reply_fn is None:
            raise StrategyUndefined("invisible play has no robber choices")
        return self.reply_fn(state, ann)


@dataclass
class Verdict:
    winner: str
    k: int
    variant: VariantSpec
    certificate: CopStrategy | RobberStrategy | None = None
    stats: dict = field(default_factory=dict)

    @property
    def cops_win(self) -> bool:
        return self.winner == WIN


@dataclass
class CopwidthResult:
    k: int
    win_cert: CopStrategy
    lose_cert: RobberStrategy | None
    stats: dict = field(default_factory=dict)

    def __iter__(self):
        return iter((self.k, self.win_cert, self.lose_cert))


def _subsets(pool: int, sizes: range) -> list[int]:
    vs = list(bits(pool))
    out = []
    for c in sizes:
        for combo in itertools.combinations(vs, c):
            m = 0
            for v in combo:
                m |= 1 << v
            out.append(m)
    return out


class _Engine:
    """Shared plumbing: reach cache and budget."""

    def __init__(self, G: Graph, variant: VariantSpec, k: int, budget: Budget):
        self.G = G
        self.v = variant
        self.k = k
        self.m = min(k, G.n)
        self.s = variant.speed
        self.budget = budget
        self._reach: dict[tuple[int, int], int] = {}
        self.nodes = 0

    def reach(self, forbidden: int, sources: int) -> int:
        key = (forbidden, sources)
        got = self._reach.get(key)
        if got is None:
            got = bounded_reach(self.G, forbidden, sources, self.s)
            self._reach[key] = got
        return got

    def options(self, S: int, T: int, r: int) -> int:
        if self.v.lazy and not T >> r & 1:
            return 1 << r
        return self.reach(S & T, 1 << r)

    def tick(self, nodes: int = 1) -> None:
        self.nodes += nodes
        self.budget.spend(nodes)

    def stats(self) -> dict:
        return {"nodes": self.nodes}


# ---------------------------------------------------------------- visible, plain


class _VisiblePlain(_Engine):
    """Attractor on (cops, robber) positions.

    More cops on the board never hurt, so announcements always use
    min(k, n) cops; for a lazy robber the extra cops can avoid his vertex.
    """

    def solve(self) -> bool:
        G, full = self.G, self.G.full
        anns = _subsets(full, range(self.m, self.m + 1))
        self.anns = anns
        W = dict.fromkeys(anns, 0)
        self.W = W
        self.choice: dict[tuple[int, int], int] = {}
        changed = True
        while changed:
            changed = False
            for S in anns:
                todo = full & ~S & ~W[S]
                if not todo:
                    continue
                for T in anns:
                    if T == S:
                        continue
                    self.tick()
                    WT = W[T]
                    won = 0
                    for r in bits(todo):
                        if not self.options(S, T, r) & ~T & ~WT:
                            won |= 1 << r
                            self.choice[(S, r)] = T
                    if won:
                        W[S] |= won
                        todo &= ~won
                        changed = True
                        if not todo:
                            break
        self.start_loss = [r for r in range(G.n) if self.best_move(0, r) is None]
        return not self.start_loss

    def best_move(self, S: int, r: int) -> int | None:
        if S in self.W:
            if self.W[S] >> r & 1:
                return self.choice[(S, r)]
            return None
        for T in self.anns:
            if T != S and not self.options(S, T, r) & ~T & ~self.W[T]:
                return T
        return None

    def value(self, state: SearchState) -> bool:
        return self.best_move(state.cops, state.robber) is not None

    def strategy(self) -> CopStrategy:
        def rule(state: SearchState) -> int:
            T = self.best_move(state.cops, state.robber)
            if T is None:
                raise StrategyUndefined(state)
            return T

        return CopStrategy(self.v, self.k, rule=rule, name="attractor")


# ---------------------------------------------------------------- visible, cop-monotone


class _VisibleCopMonotone(_Engine):
    """Depth-first search over (cops, robber, cleared).

    A robber who reaches a vacated vertex can never be caught again, so the
    cops must keep every cleared vertex out of his reach. Ignoring stalls,
    each round enlarges the cleared zone or the vacated set, so the arena
    is acyclic.
    """

    def solve(self) -> bool:
        self.memo: dict[tuple[int, int, int], int | None] = {}
        self._anns: dict[int, list[int]] = {}
        self.start_loss = [r for r in range(self.G.n) if self.best_move(0, r, 0) is None]
        return not self.start_loss

    def announcements(self, avail: int) -> list[int]:
        got = self._anns.get(avail)
        if got is None:
            got = _subsets(avail, range(min(self.k, avail.bit_count()), 0, -1))
            self._anns[avail] = got
        return got

    def best_move(self, S: int, r: int, Z: int) -> int | None:
        if Z >> r & 1:
            return None
        key = (S, r, Z)
        memo = self.memo
        if key in memo:
            return memo[key]
        self.tick()
        found = None
        for T in self.announcements(S | (self.G.full & ~Z)):
            if T == S:
                continue
            D = self.options(S, T, r)
            if D & Z:
                continue
            rest = D & ~T
            Z2 = Z | T
            if all(self.best_move(T, d, Z2) is not None for d in bits(rest)):
                found = T
                break
        memo[key] = found
        return found

    def value(self, state: SearchState) -> bool:
        return self.best_move(state.cops, state.robber, state.cleared) is not None

    def strategy(self) -> CopStrategy:
        def rule(state: SearchState) -> int:
            T = self.best_move(state.cops, state.robber, state.cleared)
            if T is None:
                raise StrategyUndefined(state)
            return T

        return CopStrategy(self.v, self.k, rule=rule, name="monotone-search")


# ---------------------------------------------------------------- visible, robber-monotone


class _VisibleRobberGeneric(_Engine):
    """Reference attractor on (cops, robber, cleared) with every announcement."""

    def solve(self) -> bool:
        G = self.G
        anns = _subsets(G.full, range(1, self.m + 1))
        index: dict[tuple[int, int, int], int] = {}
        states: list[tuple[int, int, int]] = []
        moves: list[list[tuple[int, list[int]]]] = []
        captures: list[int | None] = []

        def intern(key: tuple[int, int, int]) -> int:
            i = index.get(key)
            if i is None:
                i = len(states)
                index[key] = i
                states.append(key)
                queue.append(i)
            return i

        queue: deque[int] = deque()
        for r in range(G.n):
            intern((0, r, 0))
        while queue:
            i = queue.popleft()
            S, r, Z = states[i]
            self.tick()
            opts: list[tuple[int, list[int]]] = []
            cap = None
            for T in anns:
                if T == S:
                    continue
                D = self.options(S, T, r)
                if violates(self.v, D, Z, T):
                    continue
                rest = D & ~T
                if not rest:
                    cap = T
                    break
                opts.append((T, [(T, d, Z | T) for d in bits(rest)]))
            captures.append(cap)
            if cap is not None:
                moves.append([])
                continue
            moves.append([(T, [intern(x) for x in succ]) for T, succ in opts])
        # counter-based attractor
        won = [c is not None for c in captures]
        choice: list[int | None] = list(captures)
        preds: dict[int, list[tuple[int, int]]] = {}
        count: list[list[int]] = []
        for i, opts in enumerate(moves):
            row = []
            for j, (T, succ) in enumerate(opts):
                uniq = set(succ)
                row.append(len(uniq))
                for x in uniq:
                    preds.setdefault(x, []).append((i, j))
            count.append(row)
        work = deque(i for i in range(len(states)) if won[i])
        while work:
            x = work.popleft()
            for i, j in preds.get(x, ()):
                if won[i]:
                    continue
                count[i][j] -= 1
                if count[i][j] == 0:
                    won[i] = True
                    choice[i] = moves[i][j][0]
                    work.append(i)
        self.index, self.won, self.choice_of = index, won, choice
        self.start_loss = [r for r in range(G.n) if not won[index[(0, r, 0)]]]
        return not self.start_loss

    def value(self, state: SearchState) -> bool:
        i = self.index.get((state.cops, state.robber, state.cleared))
        return i is not None and self.won[i]

    def strategy(self) -> CopStrategy:
        table = {}
        for (S, r, Z), i in self.index.items():
            if self.won[i]:
                table[(S, r, Z)] = self.choice_of[i]
        return CopStrategy(self.v, self.k, table=table, name="attractor")


def _first_hits(G: Graph, r: int, Z: int, s) -> int:
    """Cleared vertices at distance <= s from r along paths outside Z."""
    inside = bounded_reach(G, Z, 1 << r, s - 1) if s != 1 else 1 << r
    return G.neighborhood(inside) & Z


class _VisibleRobberActive(_Engine):
    """Robber-monotone visible active play on (robber, cleared).

    A legal round must keep every first-hit cleared vertex H(r, Z) guarded;
    given that, the robber's options and the future depend only on (r, Z).
    Each useful announcement adds a fresh vertex, so the arena is acyclic.
    """

    def solve(self) -> bool:
        self.memo: dict[tuple[int, int], int | None] = {}
        self._hits: dict[tuple[int, int], int] = {}
        self._anns: dict[int, list[int]] = {}
        self.start_loss = [r for r in range(self.G.n) if self.best_move(r, 0) is None]
        return not self.start_loss

    def hits(self, r: int, Z: int) -> int:
        key = (r, Z)
        h = self._hits.get(key)
        if h is None:
            h = _first_hits(self.G, r, Z, self.s)
            self._hits[key] = h
        return h

    def best_move(self, r: int, Z: int) -> int | None:
        key = (r, Z)
        if key in self.memo:
            return self.memo[key]
        self.tick()
        H = self.hits(r, Z)
        found = None
        spare = self.k - H.bit_count()
        if spare >= 1:
            D = self.reach(H, 1 << r)
            fresh = self.G.full & ~Z
            # T = H + N + P with N fresh and nonempty, P extra cleared guards
            for N in self._fresh_sets(fresh, spare):
                for P in self._guard_sets(Z & ~H, spare - N.bit_count()):
                    T = H | N | P
                    rest = D & ~T
                    Z2 = Z | N
                    if all(self.hits(d, Z2) & ~T == 0 and self.best_move(d, Z2) is not None for d in bits(rest)):
                        found = T
                        break
                if found is not None:
                    break
        self.memo[key] = found
        return found

    def _fresh_sets(self, fresh: int, spare: int) -> list[int]:
        return _subsets(fresh, range(min(spare, fresh.bit_count()), 0, -1))

    def _guard_sets(self, pool: int, spare: int) -> list[int]:
        key = (pool << 8) | spare
        got = self._anns.get(key)
        if got is None:
            got = _subsets(pool, range(min(spare, pool.bit_count()), -1, -1))
            self._anns[key] = got
        return got

    def value(self, state: SearchState) -> bool:
        r, Z = state.robber, state.cleared
        if Z >> r & 1 or self.hits(r, Z) & ~state.cops:
            return False
        return self.best_move(r, Z) is not None

    def strategy(self) -> CopStrategy:
        def rule(state: SearchState) -> int:
            if self.hits(state.robber, state.cleared) & ~state.cops:
                raise StrategyUndefined(state)
            T = self.best_move(state.robber, state.cleared)
            if T is None:
                raise StrategyUndefined(state)
            return T

        return CopStrategy(self.v, self.k, rule=rule, name="cleared-zone")


class _VisibleRobberLazy(_VisibleRobberActive):
    """Robber-monotone visible lazy play on (robber, cleared).

    The robber sits still unless attacked, so the cops can rearrange inside
    the cleared zone at no cost. Moves either occupy one fresh vertex, or
    attack the robber from the guards H(r, Z) plus fresh vertices N.
    """

    def best_move(self, r: int, Z: int) -> tuple | None:  # type: ignore[override]
        key = (r, Z)
        if key in self.memo:
            return self.memo[key]
        self.tick()
        H = self.hits(r, Z)
        found = None
        spare = self.k - H.bit_count()
        fresh = self.G.full & ~Z & ~(1 << r)
        if spare >= 1:
            D = self.reach(H, 1 << r)
            for N in self._fresh_sets(fresh, spare - 1):
                N |= 1 << r
                rest = D & ~N
                Z2 = Z | N
                if all(self.best_move(d, Z2) is not None for d in bits(rest)):
                    found = ("attack", H, N)
                    break
        if found is None:
            for u in bits(fresh):
                if self.best_move(r, Z | (1 << u)) is not None:
                    found = ("add", 0, 1 << u)
                    break
        self.memo[key] = found
        return found

    def _fresh_sets(self, fresh: int, spare: int) -> list[int]:
        return _subsets(fresh, range(min(spare, fresh.bit_count()), -1, -1))

    def value(self, state: SearchState) -> bool:
        r, Z = state.robber, state.cleared
        return not Z >> r & 1 and self.best_move(r, Z) is not None

    def strategy(self) -> CopStrategy:
        def rule(state: SearchState) -> int:
            move = self.best_move(state.robber, state.cleared)
            if move is None:
                raise StrategyUndefined(state)
            kind, H, N = move
            if kind == "add":
                return N
            if H & ~state.cops:
                return H  # bring the guards in first; the robber is not attacked
            return H | N

        return CopStrategy(self.v, self.k, rule=rule, name="cleared-zone")


# ---------------------------------------------------------------- invisible


class _InvisibleGeneric(_Engine):
    """Reference search from (no cops, everything contaminated) to a clean graph.

    Plain games keep only announcements of min(k, n) cops (a lazy game may
    use fewer once every clean vertex is occupied) and prune states whose
    contamination contains that of a visited state with the same cops.
    Monotone games explore exact states with every announcement; an
    announcement letting contamination touch the cleared zone is dropped
    (cop-monotone: the vertex could never be cleaned again).
    """

    def solve(self) -> bool:
        G, v = self.G, self.v
        full = G.full
        plain = v.monotone == "none"
        if plain:
            anns = _subsets(full, range(self.m, 0, -1) if v.lazy else range(self.m, self.m + 1))
        else:
            anns = _subsets(full, range(self.m, 0, -1))
        start = (0, full)
        parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
        seen_by_cops: dict[int, list[int]] = {}
        queue = deque([start])
        goal = None
        while queue and goal is None:
            S, R = queue.popleft()
            self.tick()
            Z = full & ~R
            clean = Z
            for T in anns:
                if T == S:
                    continue
                if plain and v.lazy and T.bit_count() < self.m and clean & ~T:
                    continue
                if v.monotone == "cop" and T & Z & ~S:
                    continue
                reached = (R & ~T) | self.reach(S & T, R & T) if v.lazy else self.reach(S & T, R)
                if v.monotone == "cop":
                    if reached & Z:
                        continue
                elif violates(v, reached, Z, T):
                    continue
                R2 = reached & ~T
                nxt = (T, R2)
                if nxt in parent:
                    continue
                if plain:
                    seen = seen_by_cops.setdefault(T, [])
                    if any(R0 & ~R2 == 0 for R0 in seen):
                        continue
                    seen.append(R2)
                parent[nxt] = ((S, R), T)
                if not R2:
                    goal = nxt
                    break
                queue.append(nxt)
        self.explored = len(parent)
        if goal is None:
            return False
        path = []
        node = goal
        while parent[node] is not None:
            prev, T = parent[node]
            path.append((prev, T))
            node = prev
        self.path = path[::-1]
        return True

    def strategy(self) -> CopStrategy:
        return _script_strategy(self.G, self.v, self.k, [T for _, T in self.path], "search")

    def stats(self) -> dict:
        return {"nodes": self.nodes, "states": self.explored}


class _InvisibleCut(_Engine):
    """Contamination-only game where the guards are exactly cut(R).

    Used for robber- and cop-monotone invisible active play: contamination
    spreads through all of R every round, so every cleared neighbor of R
    must be guarded, which makes speed irrelevant.
    """

    def solve(self) -> bool:
        self.memo: dict[int, int | None] = {}
        return self.pick(self.G.full) is not None

    def pick(self, R: int) -> int | None:
        if not R:
            return -1
        if R in self.memo:
            return self.memo[R]
        self.tick()
        found = None
        if (self.G.neighborhood(R) & ~R).bit_count() + 1 <= self.k:
            for x in bits(R):
                if self.pick(R & ~(1 << x)) is not None:
                    found = x
                    break
        self.memo[R] = found
        return found

    def strategy(self) -> CopStrategy:
        G = self.G
        script = []
        R = G.full
        while R:
            x = self.pick(R)
            script.append((G.neighborhood(R) & ~R) | (1 << x))
            R &= ~(1 << x)
        return _script_strategy(G, self.v, self.k, script, "separation")


class _InvisibleLazyRobber(_Engine):
    """Robber-monotone invisible lazy play on the contaminated set alone.

    Attacking x spills contamination up to distance s, so all cleared
    vertices it would reach first must be guarded; one attack at a time is
    enough.
    """

    def solve(self) -> bool:
        self.memo: dict[int, int | None] = {}
        return self.pick(self.G.full) is not None

    def guards(self, x: int, R: int) -> int:
        return _first_hits(self.G, x, self.G.full & ~R, self.s)

    def pick(self, R: int) -> int | None:
        if not R:
            return -1
        if R in self.memo:
            return self.memo[R]
        self.tick()
        found = None
        order = sorted(bits(R), key=lambda x: (self.guards(x, R).bit_count(), x))
        for x in order:
            if self.guards(x, R).bit_count() + 1 > self.k:
                break
            if self.pick(R & ~(1 << x)) is not None:
                found = x
                break
        self.memo[R] = found
        return found

    def strategy(self) -> CopStrategy:
        script = []
        S, R = 0, self.G.full
        while R:
            x = self.pick(R)
            H = self.guards(x, R)
            if H & ~S:
                script.append(H)
                S = H
            script.append(H | (1 << x))
            S = H | (1 << x)
            R &= ~(1 << x)
        return _script_strategy(self.G, self.v, self.k, script, "elimination")


def _script_strategy(G: Graph, variant: VariantSpec, k: int, script: list[int], name: str) -> CopStrategy:
    """Tabulate a script along the play it produces."""
    table = {}
    state = initial_state(G, variant)
    for T in script:
        table[state_key(variant, state)] = T
        nxt = step(G, variant, state, T)
        if not isinstance(nxt, SearchState):
            break
        state = nxt
    return CopStrategy(variant, k, table=table, name=name)


# ---------------------------------------------------------------- dispatch


def _engine(G: Graph, variant: VariantSpec, k: int, budget: Budget, reduce: bool) -> _Engine:
    strict = not variant.lenient
    if variant.visible:
        if variant.monotone == "none":
            return _VisiblePlain(G, variant, k, budget)
        if variant.monotone == "cop":
            return _VisibleCopMonotone(G, variant, k, budget)
        if reduce and strict:
            cls = _VisibleRobberLazy if variant.lazy else _VisibleRobberActive
            return cls(G, variant, k, budget)
        return _VisibleRobberGeneric(G, variant, k, budget)
    if reduce and strict and variant.monotone == "robber" and variant.lazy:
        return _InvisibleLazyRobber(G, variant, k, budget)
    if reduce and not variant.lazy and variant.monotone in ("robber", "cop") and (strict or variant.monotone == "cop"):
        return _InvisibleCut(G, variant, k, budget)
    return _InvisibleGeneric(G, variant, k, budget)


def cops_win(
    G: Graph, variant: VariantSpec, k: int, budget: Budget | int | None = None, reduce: bool = True
) -> Verdict:
    """Exact decision with a certificate for the winning side."""
    if k < 1:
        raise ValueError("need k >= 1")
    budget = as_budget(budget)
    eng = _engine(G, variant, k, budget, reduce)
    if G.n == 0:
        return Verdict(WIN, k, variant, CopStrategy(variant, k), {"nodes": 0})
    won = eng.solve()
    stats = eng.stats() | {"engine": type(eng).__name__.lstrip("_")}
    if won:
        return Verdict(WIN, k, variant, eng.strategy(), stats)
    return Verdict(LOSE, k, variant, _robber_certificate(G, variant, k, eng), stats)


def _robber_certificate(G: Graph, variant: VariantSpec, k: int, eng: _Engine) -> RobberStrategy:
    if not variant.visible:
        return RobberStrategy(variant, k, None)
    value = eng.value

    def reply(state: SearchState, ann: int) -> int:
        dest, _ = robber_options(G, variant, state.cops, ann, state.robber)
        fallback = None
        for d in bits(dest):
            nxt = step(G, variant, state, ann, d)
            if not isinstance(nxt, SearchState):
                if nxt.kind == "violated":
                    return d
                continue
            if fallback is None:
                fallback = d
            if variant.monotone == "cop" and nxt.vacated >> d & 1:
                return d
            if not value(nxt):
                return d
        if fallback is not None:
            return fallback
        return (dest & -dest).bit_length() - 1

    return RobberStrategy(variant, k, eng.start_loss[0], reply)


def copwidth(
    G: Graph, variant: VariantSpec, budget: Budget | int | None = None, reduce: bool = True
) -> CopwidthResult:
    """Least k for which the cops win, by ascending search from k = 1."""
    budget = as_budget(budget)
    lose = None
    nodes = 0
    for k in range(1, max(G.n, 1) + 1):
        verdict = cops_win(G, variant, k, budget, reduce)
        nodes += verdict.stats.get("nodes", 0)
        if verdict.cops_win:
            return CopwidthResult(k, verdict.certificate, lose, {"nodes": nodes})
        lose = verdict.certificate
    raise AssertionError("n cops always win")


# ---------------------------------------------------------------- verification


def verify_strategy(
    G: Graph, variant: VariantSpec, strat: CopStrategy, k: int, budget: Budget | int | None = None
) -> Verdict:
    """Replay a cop strategy against every robber behavior.

    Raises :class:`StrategyUndefined` when the strategy has no move for a
    state it reaches. A failing check returns a robber verdict whose stats
    name the reason and the play leading to it.
    """
    budget = as_budget(budget)
    stats: dict = {"states": 0, "width": 0, "depth": 0}

    def fail(reason: str, play: list) -> Verdict:
        stats["failure"] = reason
        stats["play"] = play
        return Verdict(LOSE, k, variant, strat, stats)

    def legal(state: SearchState, ann: int) -> str | None:
        if ann & ~G.full:
            return "announcement outside the graph"
        if ann.bit_count() > k:
            return f"announcement uses {ann.bit_count()} cops"
        if variant.monotone == "cop" and ann & state.vacated:
            return "cop returns to a vacated vertex"
        return None

    if not variant.visible:
        state = initial_state(G, variant)
        seen = set()
        play: list = []
        while True:
            key = state_key(variant, state) + (state.cleared,)
            if key in seen:
                return fail("announcements cycle", play)
            seen.add(key)
            budget.spend()
            stats["states"] += 1
            ann = strat.announce(state)
            play.append(ann)
            why = legal(state, ann)
            if why:
                return fail(why, play)
            stats["width"] = max(stats["width"], ann.bit_count())
            nxt = step(G, variant, state, ann)
            if isinstance(nxt, SearchState):
                state = nxt
                continue
            stats["depth"] = nxt.round
            if nxt.kind == "cleared":
                return Verdict(WIN, k, variant, strat, stats)
            return fail(nxt.kind, play)

    # visible: depth-first over every robber reply; a repeated state on the
    # current line means the robber can evade forever
    done: set = set()
    on_line: set = set()

    def explore(state: SearchState, play: list) -> Verdict | None:
        key = state_key(variant, state)
        if key in done:
            return None
        if key in on_line:
            return fail("robber evades along a cycle", play)
        budget.spend()
        stats["states"] += 1
        stats["depth"] = max(stats["depth"], len(play))
        ann = strat.announce(state)
        why = legal(state, ann)
        if why:
            return fail(why, play + [(ann, None)])
        stats["width"] = max(stats["width"], ann.bit_count())
        dest, _ = robber_options(G, variant, state.cops, ann, state.robber)
        on_line.add(key)
        for d in bits(dest):
            nxt = step(G, variant, state, ann, d)
            if isinstance(nxt, SearchState):
                bad = explore(nxt, play + [(ann, d)])
                if bad is not None:
                    return bad
            elif nxt.kind == "violated":
                return fail("robber-monotonicity violated", play + [(ann, d)])
        on_line.discard(key)
        done.add(key)
        return None

    for r in range(G.n):
        bad = explore(initial_state(G, variant, r), [("start", r)])
        if bad is not None:
            return bad
    return Verdict(WIN, k, variant, strat, stats)


def verify_robber(
    G: Graph, variant: VariantSpec, cert: RobberStrategy, k: int, budget: Budget | int | None = None
) -> bool:
    """Check a robber certificate against every cop behavior with k cops.

    Visible play follows the certificate's replies from its start vertex;
    invisible play explores every announcement sequence. Either way no
    reachable round may end with a capture or a clean graph.
    """
    budget = as_budget(budget)
    anns = _subsets(G.full, range(1, min(k, G.n) + 1))
    if variant.visible:
        start = initial_state(G, variant, cert.start)
    else:
        start = initial_state(G, variant)
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        budget.spend()
        for T in anns:
            if T == state.cops:
                continue
            if variant.monotone == "cop" and T & state.vacated:
                continue
            if variant.visible:
                d = cert.reply(state, T)
                nxt = step(G, variant, state, T, d)
            else:
                nxt = step(G, variant, state, T)
                if isinstance(nxt, SearchState) and variant.monotone == "cop" and nxt.contamination & nxt.vacated:
                    continue  # that contamination can never be cleaned
            if isinstance(nxt, SearchState):
                if variant.visible and variant.monotone == "cop" and nxt.vacated >> nxt.robber & 1:
                    continue
                cleared = nxt.cleared if variant.monotone != "none" else 0
                nxt = SearchState(nxt.cops, nxt.robber, nxt.contamination, cleared)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
            elif nxt.kind in ("caught", "cleared"):
                return False
    return True
