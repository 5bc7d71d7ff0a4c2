"""Exact k-cop game solving by backward induction, strategy extraction and match playback.

States are (cop multiset, robber vertex, side to move). The solver computes the
cop attractor layer by layer from the capture states; the value stored for a
won state is the number of cop moves still needed under optimal play.
"""

from __future__ import annotations

import csv
import enum
import math
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement, product

import numpy as np

from .core import Hypergraph, HypergraphError, Vertex, is_connected


class Side(enum.Enum):
    COP = "cop"
    ROBBER = "robber"


class Variant(enum.Enum):
    STANDARD = "standard"
    ACTIVE_ROBBER = "active"


class StrategyError(ValueError):
    """A strategy was used outside its preconditions."""


class IllegalMoveError(ValueError):
    def __init__(self, side: Side, round_no: int, detail: str):
        super().__init__(f"illegal {side.value} move in round {round_no}: {detail}")
        self.side = side
        self.round_no = round_no


_COP, _ROB = 0, 1


@dataclass(frozen=True)
class GameState:
    cops: tuple[Vertex, ...]
    robber: Vertex
    to_move: Side


def robber_moves(h: Hypergraph, r: int, variant: Variant) -> tuple[int, ...]:
    """Index-level robber options from vertex index ``r``."""
    if variant is Variant.ACTIVE_ROBBER:
        return h.open_idx[r] or (r,)
    return h.closed_idx[r]


def _check_game_args(h: Hypergraph, k: int) -> None:
    if not h.vertices:
        raise HypergraphError("hypergraph has no vertices")
    if k <= 0:
        raise ValueError("k must be positive")
    if not is_connected(h):
        raise HypergraphError("the game is only defined on connected hypergraphs")


class WinTable:
    """Solved game: which states the cops win and how many cop moves capture takes."""

    def __init__(self, h: Hypergraph, k: int, variant: Variant, multisets, values):
        self.h = h
        self.k = k
        self.variant = variant
        self._multisets: list[tuple[int, ...]] = multisets
        self._ms_index = {m: i for i, m in enumerate(multisets)}
        self._values: list[int] = values

    # -- indexing ----------------------------------------------------------
    def _slot(self, cop_idx: Sequence[int], r: int, side: int) -> int:
        m = self._ms_index[tuple(sorted(cop_idx))]
        return (m * len(self.h.vertices) + r) * 2 + side

    def _encode(self, state: GameState) -> int:
        if len(state.cops) != self.k:
            raise ValueError(f"expected {self.k} cops, got {len(state.cops)}")
        cops = [self.h.require(c) for c in state.cops]
        side = _COP if state.to_move is Side.COP else _ROB
        return self._slot(cops, self.h.require(state.robber), side)

    def value_idx(self, cop_idx: Sequence[int], r: int, side: int) -> int:
        """-1 when the state is not won."""
        return self._values[self._slot(cop_idx, r, side)]

    # -- public ------------------------------------------------------------
    def won(self, state: GameState) -> bool:
        return self._values[self._encode(state)] >= 0

    def steps_to_capture(self, state: GameState) -> int | None:
        v = self._values[self._encode(state)]
        return v if v >= 0 else None

    def __len__(self) -> int:
        return len(self._values)

    def states(self):
        verts = self.h.vertices
        for m in self._multisets:
            cops = tuple(verts[i] for i in m)
            for r, v in enumerate(verts):
                for side in (Side.COP, Side.ROBBER):
                    yield GameState(cops, v, side)

    def placement_values(self) -> dict[tuple[int, ...], list[int]]:
        """For each cop multiset, the COP-to-move values over every robber start."""
        n = len(self.h.vertices)
        return {m: [self.value_idx(m, r, _COP) for r in range(n)] for m in self._multisets}

    @cached_property
    def is_cop_win(self) -> bool:
        return any(min(vals) >= 0 for vals in self.placement_values().values())

    @cached_property
    def distances(self) -> list[list[int]]:
        n = len(self.h.vertices)
        out = []
        for s in range(n):
            d = [-1] * n
            d[s] = 0
            q = deque([s])
            while q:
                x = q.popleft()
                for y in self.h.closed_idx[x]:
                    if d[y] < 0:
                        d[y] = d[x] + 1
                        q.append(y)
            out.append(d)
        return out

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["cops", "robber", "to_move", "steps_to_capture"])
            for s in self.states():
                steps = self.steps_to_capture(s)
                w.writerow([" ".join(map(str, s.cops)), s.robber, s.to_move.value,
                            "" if steps is None else steps])


def _cop_successors(h: Hypergraph, multisets, ms_index) -> list[list[int]]:
    nb = h.closed_idx
    succ = []
    for m in multisets:
        targets = {ms_index[tuple(sorted(p))] for p in product(*(nb[c] for c in m))}
        succ.append(sorted(targets))
    return succ


def solve(h: Hypergraph, k: int, variant: Variant = Variant.STANDARD) -> WinTable:
    _check_game_args(h, k)
    n = len(h.vertices)
    multisets = list(combinations_with_replacement(range(n), k))
    ms_index = {m: i for i, m in enumerate(multisets)}
    succ = _cop_successors(h, multisets, ms_index)
    moves = [robber_moves(h, r, variant) for r in range(n)]

    total = len(multisets) * n * 2
    values = [-1] * total
    remaining = [0] * total
    layer: list[int] = []
    for mi, m in enumerate(multisets):
        occupied = set(m)
        for r in range(n):
            base = (mi * n + r) * 2
            if r in occupied:
                values[base + _COP] = 0
                values[base + _ROB] = 0
                layer.append(base + _COP)
                layer.append(base + _ROB)
            else:
                remaining[base + _ROB] = len(moves[r])

    # Layer v holds states with value v. A robber state takes the value of the
    # cop state that empties its counter (the largest, since layers are processed
    # in order); a cop state is one more than its first finalised successor.
    v = 0
    while layer:
        nxt: list[int] = []
        i = 0
        while i < len(layer):
            s = layer[i]
            i += 1
            side = s & 1
            mi, r = divmod(s >> 1, n)
            if side == _ROB:
                for mj in succ[mi]:
                    p = ((mj * n + r) << 1) | _COP
                    if values[p] < 0:
                        values[p] = v + 1
                        nxt.append(p)
            else:
                for r2 in moves[r]:
                    p = ((mi * n + r2) << 1) | _ROB
                    if values[p] < 0:
                        remaining[p] -= 1
                        if remaining[p] == 0:
                            values[p] = v
                            layer.append(p)
        layer = nxt
        v += 1
    return WinTable(h, k, variant, multisets, values)


def is_k_cop_win(h: Hypergraph, k: int, variant: Variant = Variant.STANDARD) -> bool:
    """Some cop placement wins against every robber placement."""
    return solve(h, k, variant).is_cop_win


def cop_number(h: Hypergraph, max_k: int | None = None,
               variant: Variant = Variant.STANDARD) -> int | None:
    if max_k is None:
        max_k = len(h.vertices)
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    for k in range(1, max_k + 1):
        if is_k_cop_win(h, k, variant):
            return k
    return None


# ---------------------------------------------------------------------------
# strategies


class CopStrategy:
    """Cop side: ``place()`` opens, ``move(cops, robber)`` returns all k new positions."""

    side = Side.COP
    k: int = 1
    required_variant: Variant | None = None

    def place(self) -> tuple[Vertex, ...]:
        raise NotImplementedError

    def move(self, cops: tuple[Vertex, ...], robber: Vertex) -> tuple[Vertex, ...]:
        raise NotImplementedError


class RobberStrategy:
    side = Side.ROBBER
    required_variant: Variant | None = None

    def place(self, cops: tuple[Vertex, ...]) -> Vertex:
        raise NotImplementedError

    def move(self, cops: tuple[Vertex, ...], robber: Vertex) -> Vertex:
        raise NotImplementedError


Strategy = CopStrategy | RobberStrategy


class OptimalCop(CopStrategy):
    """Moves to a successor with the fewest remaining cop moves.

    When the table is not cop-win (only reachable with ``strict=False``) it
    falls back to shrinking the summed distance to the robber.
    """

    def __init__(self, table: WinTable):
        self.table = table
        self.h = table.h
        self.k = table.k

    def place(self) -> tuple[Vertex, ...]:
        best_key, best = None, None
        for m, vals in self.table.placement_values().items():
            if min(vals) >= 0:
                key = (0, max(vals), m)
            else:
                key = (1, sum(1 for x in vals if x < 0), m)
            if best_key is None or key < best_key:
                best_key, best = key, m
        return tuple(self.h.vertices[i] for i in best)

    def move(self, cops, robber):
        h = self.h
        cop_idx = [h.index[c] for c in cops]
        r = h.index[robber]
        dist = None
        best_key, best = None, None
        for p in product(*(h.closed_idx[c] for c in cop_idx)):
            val = self.table.value_idx(p, r, _ROB)
            if val >= 0:
                key = (0, val, p)
            else:
                if dist is None:
                    dist = self.table.distances
                key = (1, sum(dist[c][r] for c in p), p)
            if best_key is None or key < best_key:
                best_key, best = key, p
        return tuple(h.vertices[i] for i in best)


class OptimalRobber(RobberStrategy):
    """Stays outside the attractor when possible, otherwise delays capture as long as it can."""

    def __init__(self, table: WinTable):
        self.table = table
        self.h = table.h
        self.required_variant = table.variant

    def _pick(self, cop_idx, candidates):
        best_key, best = None, None
        for r in candidates:
            val = self.table.value_idx(cop_idx, r, _COP)
            key = (0, r) if val < 0 else (1, -val, r)
            if best_key is None or key < best_key:
                best_key, best = key, r
        return best

    def place(self, cops):
        h = self.h
        cop_idx = [h.index[c] for c in cops]
        return h.vertices[self._pick(cop_idx, range(len(h.vertices)))]

    def move(self, cops, robber):
        h = self.h
        cop_idx = [h.index[c] for c in cops]
        r = h.index[robber]
        return h.vertices[self._pick(cop_idx, robber_moves(h, r, self.table.variant))]


def extract_strategy(t: WinTable, side: Side, strict: bool = True) -> Strategy:
    """Strategy read off a solved table.

    A cop strategy needs a cop-win table unless ``strict`` is False, in which
    case the returned cop still plays optimally from won states and pursues by
    distance elsewhere.
    """
    if side is Side.COP:
        if strict and not t.is_cop_win:
            raise StrategyError(f"{t.k} cop(s) cannot force capture on this hypergraph")
        return OptimalCop(t)
    return OptimalRobber(t)


class PassCop(CopStrategy):
    def __init__(self, h: Hypergraph, k: int = 1):
        self.h, self.k = h, k

    def place(self):
        return (self.h.vertices[0],) * self.k

    def move(self, cops, robber):
        return tuple(cops)


class PassRobber(RobberStrategy):
    required_variant = Variant.STANDARD

    def __init__(self, h: Hypergraph):
        self.h = h

    def place(self, cops):
        free = [v for v in self.h.vertices if v not in cops]
        return free[0] if free else self.h.vertices[0]

    def move(self, cops, robber):
        return robber


class RandomCop(CopStrategy):
    def __init__(self, h: Hypergraph, k: int = 1, seed=None):
        self.h, self.k = h, k
        self.rng = np.random.default_rng(seed)

    def place(self):
        return tuple(self.h.vertices[int(i)] for i in self.rng.integers(len(self.h.vertices), size=self.k))

    def move(self, cops, robber):
        h = self.h
        out = []
        for c in cops:
            nb = h.closed_idx[h.index[c]]
            out.append(h.vertices[nb[int(self.rng.integers(len(nb)))]])
        return tuple(out)


class RandomRobber(RobberStrategy):
    def __init__(self, h: Hypergraph, variant: Variant = Variant.STANDARD, seed=None):
        self.h, self.variant = h, variant
        self.rng = np.random.default_rng(seed)

    def place(self, cops):
        return self.h.vertices[int(self.rng.integers(len(self.h.vertices)))]

    def move(self, cops, robber):
        opts = robber_moves(self.h, self.h.index[robber], self.variant)
        return self.h.vertices[opts[int(self.rng.integers(len(opts)))]]


# ---------------------------------------------------------------------------
# playback


@dataclass
class MatchTrace:
    cop_placement: tuple[Vertex, ...]
    robber_placement: Vertex | None
    rounds: list[tuple[tuple[Vertex, ...], Vertex | None]] = field(default_factory=list)
    captured: bool = False
    rounds_played: int = 0

    @property
    def final_positions(self) -> tuple[tuple[Vertex, ...], Vertex | None]:
        cops, robber = self.cop_placement, self.robber_placement
        for c, r in self.rounds:
            cops = c
            if r is not None:
                robber = r
        return cops, robber

    def to_json(self, render=str) -> dict:
        return {
            "cop_placement": [render(v) for v in self.cop_placement],
            "robber_placement": None if self.robber_placement is None else render(self.robber_placement),
            "rounds": [{"cops": [render(v) for v in c], "robber": None if r is None else render(r)}
                       for c, r in self.rounds],
            "captured": self.captured,
            "rounds_played": self.rounds_played,
        }


def _check_variant(strategy: Strategy, variant: Variant) -> None:
    need = getattr(strategy, "required_variant", None)
    if need is not None and need is not variant:
        raise StrategyError(
            f"{type(strategy).__name__} is only valid under the {need.value} variant, not {variant.value}")


def play_match(h: Hypergraph, k: int, cop: CopStrategy, robber: RobberStrategy,
               max_rounds: int, variant: Variant = Variant.STANDARD) -> MatchTrace:
    """Placements, then alternating cop and robber moves until capture or ``max_rounds``.

    ``rounds_played`` counts cop moves made after placement.
    """
    _check_game_args(h, k)
    _check_variant(cop, variant)
    _check_variant(robber, variant)

    cops = tuple(cop.place())
    if len(cops) != k or any(c not in h for c in cops):
        raise IllegalMoveError(Side.COP, 0, f"bad placement {cops!r}")
    trace = MatchTrace(cops, None)
    r = robber.place(cops)
    if r not in h:
        raise IllegalMoveError(Side.ROBBER, 0, f"bad placement {r!r}")
    trace.robber_placement = r
    if r in cops:
        trace.captured = True
        return trace

    for rnd in range(1, max_rounds + 1):
        new = tuple(cop.move(cops, r))
        if len(new) != k:
            raise IllegalMoveError(Side.COP, rnd, f"expected {k} positions, got {len(new)}")
        for old, c in zip(cops, new):
            if c not in h or c not in h.closed(old):
                raise IllegalMoveError(Side.COP, rnd, f"{old!r} -> {c!r}")
        cops = new
        trace.rounds_played = rnd
        if r in cops:
            trace.rounds.append((cops, None))
            trace.captured = True
            return trace
        r2 = robber.move(cops, r)
        legal = robber_moves(h, h.index[r], variant)
        if r2 not in h or h.index[r2] not in legal:
            raise IllegalMoveError(Side.ROBBER, rnd, f"{r!r} -> {r2!r}")
        r = r2
        trace.rounds.append((cops, r))
        if r in cops:
            trace.captured = True
            return trace
    return trace


def evader_survives(h: Hypergraph, k: int, robber: RobberStrategy,
                    variant: Variant = Variant.STANDARD) -> bool:
    """True iff ``robber`` is never captured, whatever the cops place or play.

    Explores every cop placement and every cop move sequence (ordered cop tuples),
    so this is a proof of evasion rather than a sample of matches.
    """
    _check_game_args(h, k)
    _check_variant(robber, variant)
    verts = h.vertices
    seen: set[tuple[tuple[int, ...], int]] = set()
    stack = []
    for placement in product(range(len(verts)), repeat=k):
        cops = tuple(verts[i] for i in placement)
        r = robber.place(cops)
        if r in cops:
            return False
        key = (placement, h.index[r])
        if key not in seen:
            seen.add(key)
            stack.append(key)
    while stack:
        cop_idx, r = stack.pop()
        for p in product(*(h.closed_idx[c] for c in cop_idx)):
            if r in p:
                return False
            cops = tuple(verts[i] for i in p)
            r2 = robber.move(cops, verts[r])
            ri = h.index.get(r2, -1)
            if ri not in robber_moves(h, r, variant):
                raise IllegalMoveError(Side.ROBBER, 0, f"{verts[r]!r} -> {r2!r}")
            if ri in p:
                return False
            key = (p, ri)
            if key not in seen:
                seen.add(key)
                stack.append(key)
    return True


def state_count(h: Hypergraph, k: int) -> int:
    return math.comb(len(h.vertices) + k - 1, k) * len(h.vertices) * 2
