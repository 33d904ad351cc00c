"""Pure-Python solver kernel: memoized minimax over claimed-set bitmasks.

This is the fallback for the compiled extension in ``_kernel.pyx``; both
implement exactly the same contract and must return bit-identical results.

Positions are pairs (rmask, smask) of disjoint claimed sets.  Terminal tests
run over precomputed pair-separator masks: Resolver has won iff rmask hits
every mask; Spoiler has won iff some mask is a subset of smask (the
complement can then no longer resolve).

Values use the lexicographic convention: the winner minimizes their own move
count, the loser maximizes the winner's move count.  Encoded as a single
scalar Resolver maximizes and Spoiler minimizes:

    Resolver wins in m moves -> +(MOVE_BASE - m)
    Spoiler  wins in m moves -> -(MOVE_BASE - m)

RESOLVER=0, SPOILER=1 throughout.
"""

from __future__ import annotations

BACKEND = "python"

MOVE_BASE = 128

RESOLVER = 0
SPOILER = 1

# memoize only positions with more than this many free vertices; shallow
# endgames are cheap to recompute and dominate the table otherwise
_MEMO_MIN_FREE = 4


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _resolver_won(masks, rmask: int) -> bool:
    for m in masks:
        if not m & rmask:
            return False
    return True


def _spoiler_won(masks, smask: int) -> bool:
    for m in masks:
        if m & ~smask == 0:
            return True
    return False


def solve_winner(n: int, masks, rmask: int, smask: int, mover: int) -> int:
    """Winner (RESOLVER or SPOILER) under perfect play, boolean search with
    first-winning-move cutoff."""
    full = (1 << n) - 1
    memo: dict[int, int] = {}

    def rec(r: int, s: int, mv: int) -> int:
        if _resolver_won(masks, r):
            return RESOLVER
        if _spoiler_won(masks, s):
            return SPOILER
        key = (r << n | s) << 1 | mv
        got = memo.get(key)
        if got is not None:
            return got
        free = full & ~(r | s)
        win = 1 - mv  # pessimistic: assume opponent wins
        f = free
        while f:
            low = f & -f
            f ^= low
            if mv == RESOLVER:
                if rec(r | low, s, SPOILER) == RESOLVER:
                    win = RESOLVER
                    break
            else:
                if rec(r, s | low, RESOLVER) == SPOILER:
                    win = SPOILER
                    break
        if _popcount(free) > _MEMO_MIN_FREE:
            memo[key] = win
        return win

    return rec(rmask, smask, mover)


def solve_value(
    n: int, masks, rmask: int, smask: int, mover: int, heuristic: bool = False
) -> tuple[int, int]:
    """(winner, winner_moves) under the lexicographic optimality convention.

    With heuristic=True, moves are tried in order of how many still-unresolved
    pairs they separate (descending, ties by ascending id); the value must be
    identical either way.
    """
    full = (1 << n) - 1
    memo: dict[int, int] = {}

    def rec(r: int, s: int, mv: int) -> int:
        if _resolver_won(masks, r):
            return MOVE_BASE - _popcount(r)
        if _spoiler_won(masks, s):
            return -(MOVE_BASE - _popcount(s))
        key = (r << n | s) << 1 | mv
        got = memo.get(key)
        if got is not None:
            return got
        free = full & ~(r | s)

        order = []
        f = free
        while f:
            low = f & -f
            f ^= low
            order.append(low)
        if heuristic:
            alive = [m for m in masks if not m & r]
            order.sort(key=lambda b: (-sum(1 for m in alive if m & b), b))

        if mv == RESOLVER:
            best = -MOVE_BASE
            target = MOVE_BASE - _popcount(r) - 1  # immediate-win value
            for low in order:
                v = rec(r | low, s, SPOILER)
                if v > best:
                    best = v
                    if best == target:
                        break
        else:
            best = MOVE_BASE
            target = -(MOVE_BASE - _popcount(s) - 1)
            for low in order:
                v = rec(r, s | low, RESOLVER)
                if v < best:
                    best = v
                    if best == target:
                        break
        if _popcount(free) > _MEMO_MIN_FREE:
            memo[key] = best
        return best

    v = rec(rmask, smask, mover)
    if v > 0:
        return RESOLVER, MOVE_BASE - v
    return SPOILER, MOVE_BASE + v
