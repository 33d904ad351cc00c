"""Exact solver for the Maker-Breaker resolving game.

Resolver (Maker) tries to claim every vertex of some resolving set; Spoiler
(Breaker) tries to claim at least one vertex from every resolving set.  The
solver reports the winner under perfect play together with the winner's move
count under the lexicographic convention: the primary objective is winning,
secondarily the winner minimizes their own moves and the loser maximizes the
winner's moves.  (The paper behind this convention only pins down the
winner's minimum; the loser's side is the standard completion consistent
with the R'_MB >= R_MB >= dim inequalities.)

The hot search loop lives in a compiled Cython kernel when available, with a
pure-Python twin as fallback; both give bit-identical answers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph, GraphError
from .resolving import as_mask, pair_separators

try:  # compiled kernel, built by setup.py
    from . import _kernel as _impl
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernel_py as _impl

from . import _kernel_py

KERNEL_BACKEND: str = _impl.BACKEND

DEFAULT_SOLVER_CAP = 16


class Player(enum.Enum):
    RESOLVER = "resolver"
    SPOILER = "spoiler"

    @property
    def opponent(self) -> "Player":
        return Player.SPOILER if self is Player.RESOLVER else Player.RESOLVER

    @property
    def index(self) -> int:
        return 0 if self is Player.RESOLVER else 1


class OutcomeClass(enum.Enum):
    R = "R"  # Resolver wins no matter who starts
    S = "S"  # Spoiler wins no matter who starts
    N = "N"  # the first player wins


@dataclass(frozen=True)
class GameState:
    """Claimed sets plus who moved first; turn is derived from set sizes."""

    resolver: frozenset[int]
    spoiler: frozenset[int]
    first: Player

    def __post_init__(self):
        if self.resolver & self.spoiler:
            raise ValueError("claimed sets must be disjoint")
        a, b = len(self.resolver), len(self.spoiler)
        if self.first is Player.RESOLVER:
            if not (a == b or a == b + 1):
                raise ValueError("move counts out of balance")
        else:
            if not (b == a or b == a + 1):
                raise ValueError("move counts out of balance")

    @classmethod
    def initial(cls, first: Player) -> "GameState":
        return cls(frozenset(), frozenset(), first)

    @property
    def to_move(self) -> Player:
        a, b = len(self.resolver), len(self.spoiler)
        if self.first is Player.RESOLVER:
            return Player.RESOLVER if a == b else Player.SPOILER
        return Player.SPOILER if b == a else Player.RESOLVER

    def claimed(self) -> frozenset[int]:
        return self.resolver | self.spoiler

    def apply(self, player: Player, vertex: int) -> "GameState":
        if player is not self.to_move:
            raise ValueError(f"not {player.value}'s turn")
        if vertex in self.resolver or vertex in self.spoiler:
            raise ValueError(f"vertex {vertex} already claimed")
        if player is Player.RESOLVER:
            return GameState(self.resolver | {vertex}, self.spoiler, self.first)
        return GameState(self.resolver, self.spoiler | {vertex}, self.first)


@dataclass(frozen=True)
class GameValue:
    winner: Player
    winner_moves: int


@dataclass(frozen=True)
class GameNumbers:
    """The four MBRG invariants; each present exactly when its player wins
    the corresponding game (R-game = Resolver first, S-game = Spoiler first)."""

    r_mb: Optional[int] = None
    r_mb_prime: Optional[int] = None
    s_mb: Optional[int] = None
    s_mb_prime: Optional[int] = None


def _check_solvable(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise GraphError(f"order {g.n} exceeds solver cap {cap}")
    if g.n < 2:
        raise GraphError("the game needs at least two vertices")
    if not g.is_connected():
        raise GraphError("solver requires a connected graph")


def terminal_status(g: Graph, state: GameState) -> Optional[Player]:
    """Resolver once their set resolves; else Spoiler once the complement of
    their set can no longer resolve; else None.  Both conditions are monotone
    under extensions, so the first trigger is final."""
    masks = pair_separators(g)
    rm = as_mask(g, state.resolver)
    if all(rm & m for m in masks):
        return Player.RESOLVER
    sm = as_mask(g, state.spoiler)
    if any(m & ~sm == 0 for m in masks):
        return Player.SPOILER
    return None


def solve(
    g: Graph,
    first: Player,
    state: Optional[GameState] = None,
    cap: int = DEFAULT_SOLVER_CAP,
    heuristic: bool = False,
) -> GameValue:
    """Winner and the winner's optimal move count from the given position
    (default: the empty board) with `first` to have moved first."""
    _check_solvable(g, cap)
    if state is None:
        state = GameState.initial(first)
    masks = pair_separators(g)
    winner_idx, moves = _impl.solve_value(
        g.n,
        masks,
        as_mask(g, state.resolver),
        as_mask(g, state.spoiler),
        state.to_move.index,
        heuristic,
    )
    winner = Player.RESOLVER if winner_idx == 0 else Player.SPOILER
    return GameValue(winner, moves)


def winner_only(
    g: Graph,
    first: Player,
    state: Optional[GameState] = None,
    cap: int = DEFAULT_SOLVER_CAP,
) -> Player:
    """Winner under perfect play, without move counting.  Much faster than
    solve() on larger boards because winning branches cut immediately."""
    _check_solvable(g, cap)
    if state is None:
        state = GameState.initial(first)
    masks = pair_separators(g)
    idx = _impl.solve_winner(
        g.n,
        masks,
        as_mask(g, state.resolver),
        as_mask(g, state.spoiler),
        state.to_move.index,
    )
    return Player.RESOLVER if idx == 0 else Player.SPOILER


def outcome(g: Graph, cap: int = DEFAULT_SOLVER_CAP) -> OutcomeClass:
    """R / S / N from the winners of the R-game and the S-game."""
    r_game = winner_only(g, Player.RESOLVER, cap=cap)
    s_game = winner_only(g, Player.SPOILER, cap=cap)
    if r_game is Player.RESOLVER and s_game is Player.RESOLVER:
        return OutcomeClass.R
    if r_game is Player.SPOILER and s_game is Player.SPOILER:
        return OutcomeClass.S
    if r_game is Player.RESOLVER and s_game is Player.SPOILER:
        return OutcomeClass.N
    # second player winning both games contradicts the No-Skip lemma
    raise AssertionError(f"second player won both games on {g!r}")


def game_numbers(g: Graph, cap: int = DEFAULT_SOLVER_CAP) -> GameNumbers:
    """R_MB / R'_MB / S_MB / S'_MB, each present exactly when its defining
    player wins the corresponding game."""
    rv = solve(g, Player.RESOLVER, cap=cap)
    sv = solve(g, Player.SPOILER, cap=cap)
    nums = {}
    if rv.winner is Player.RESOLVER:
        nums["r_mb"] = rv.winner_moves
    else:
        nums["s_mb"] = rv.winner_moves
    if sv.winner is Player.RESOLVER:
        nums["r_mb_prime"] = sv.winner_moves
    else:
        nums["s_mb_prime"] = sv.winner_moves
    return GameNumbers(**nums)


def best_move_masks(
    g: Graph, rmask: int, smask: int, mover: Player
) -> tuple[int, GameValue]:
    """Optimal move for `mover` from raw claimed-set masks (no move-balance
    checks; used for restricted subgames where one side may have skipped).

    Preference is lexicographic for the mover (win first, then the move-count
    convention); ties break to the lowest vertex id.
    """
    masks = pair_separators(g)
    best_v: Optional[int] = None
    best_score: Optional[int] = None
    best_val: Optional[tuple[int, int]] = None
    for v in range(g.n):
        bit = 1 << v
        if (rmask | smask) & bit:
            continue
        if mover is Player.RESOLVER:
            widx, moves = _impl.solve_value(g.n, masks, rmask | bit, smask, 1)
        else:
            widx, moves = _impl.solve_value(g.n, masks, rmask, smask | bit, 0)
        score = (_kernel_py.MOVE_BASE - moves) * (1 if widx == 0 else -1)
        if mover is Player.SPOILER:
            score = -score
        if best_score is None or score > best_score:
            best_score = score
            best_v = v
            best_val = (widx, moves)
    if best_v is None:
        raise ValueError("no legal move")
    winner = Player.RESOLVER if best_val[0] == 0 else Player.SPOILER
    return best_v, GameValue(winner, best_val[1])


def best_move(
    g: Graph, state: GameState, cap: int = DEFAULT_SOLVER_CAP
) -> tuple[int, GameValue]:
    """Optimal move for the player to move, with the resulting game value."""
    _check_solvable(g, cap)
    rm = as_mask(g, state.resolver)
    sm = as_mask(g, state.spoiler)
    return best_move_masks(g, rm, sm, state.to_move)


@dataclass
class Transcript:
    """Replayable move record: (player, vertex) pairs from the empty board."""

    first: Player
    moves: list[tuple[Player, int]] = field(default_factory=list)


def replay(g: Graph, transcript: Transcript) -> tuple[GameState, Optional[Player]]:
    """Re-validate a transcript move by move; returns the final state and the
    terminal winner (None if the game never finished).  Moves made after the
    terminal trigger are still legal vertex claims and are validated too."""
    state = GameState.initial(transcript.first)
    winner: Optional[Player] = None
    for player, v in transcript.moves:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        state = state.apply(player, v)
        if winner is None:
            winner = terminal_status(g, state)
    return state, winner
