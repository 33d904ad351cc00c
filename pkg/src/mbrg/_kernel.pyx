# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled solver kernel: memoized minimax over claimed-set bitmasks.

Mirrors ``_kernel_py`` exactly (same contract, bit-identical results); see
that module for the position encoding and the value convention.
"""

from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libc.stdint cimport int64_t, uint64_t

BACKEND = "cython"

MOVE_BASE = 128

RESOLVER = 0
SPOILER = 1

cdef int _MOVE_BASE = 128
cdef int _MEMO_MIN_FREE = 4


cdef inline int _popcount(uint64_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef class _Search:
    cdef vector[uint64_t] masks
    cdef uint64_t full
    cdef int n
    cdef unordered_map[int64_t, int] memo
    cdef bint heuristic

    def __init__(self, int n, masks, bint heuristic=False):
        cdef uint64_t m
        self.n = n
        self.full = (<uint64_t> 1 << n) - 1
        self.heuristic = heuristic
        for m in masks:
            self.masks.push_back(m)

    cdef bint resolver_won(self, uint64_t r) nogil:
        cdef size_t i
        for i in range(self.masks.size()):
            if not (self.masks[i] & r):
                return False
        return True

    cdef bint spoiler_won(self, uint64_t s) nogil:
        cdef size_t i
        for i in range(self.masks.size()):
            if (self.masks[i] & ~s) == 0:
                return True
        return False

    # -- winner-only boolean search -----------------------------------------

    cdef int rec_winner(self, uint64_t r, uint64_t s, int mv):
        if self.resolver_won(r):
            return RESOLVER
        if self.spoiler_won(s):
            return SPOILER
        cdef int64_t key = <int64_t> (((r << self.n | s) << 1) | <uint64_t> mv)
        if self.memo.count(key):
            return self.memo[key]
        cdef uint64_t free = self.full & ~(r | s)
        cdef int win = 1 - mv
        cdef uint64_t f = free, low
        while f:
            low = f & (~f + 1)
            f ^= low
            if mv == RESOLVER:
                if self.rec_winner(r | low, s, SPOILER) == RESOLVER:
                    win = RESOLVER
                    break
            else:
                if self.rec_winner(r, s | low, RESOLVER) == SPOILER:
                    win = SPOILER
                    break
        if _popcount(free) > _MEMO_MIN_FREE:
            self.memo[key] = win
        return win

    # -- full lexicographic value search -------------------------------------

    cdef int rec_value(self, uint64_t r, uint64_t s, int mv):
        if self.resolver_won(r):
            return _MOVE_BASE - _popcount(r)
        if self.spoiler_won(s):
            return -(_MOVE_BASE - _popcount(s))
        cdef int64_t key = <int64_t> (((r << self.n | s) << 1) | <uint64_t> mv)
        if self.memo.count(key):
            return self.memo[key]
        cdef uint64_t free = self.full & ~(r | s)

        cdef vector[uint64_t] order
        cdef uint64_t f = free, low
        cdef int i, j, sc
        cdef vector[int] scores
        while f:
            low = f & (~f + 1)
            f ^= low
            order.push_back(low)
        if self.heuristic:
            # sort descending by number of still-unresolved pairs separated,
            # ties by ascending vertex id (insertion sort; move lists are tiny)
            scores.resize(order.size())
            for i in range(<int> order.size()):
                sc = 0
                for j in range(<int> self.masks.size()):
                    if not (self.masks[j] & r) and (self.masks[j] & order[i]):
                        sc += 1
                scores[i] = sc
            for i in range(1, <int> order.size()):
                low = order[i]
                sc = scores[i]
                j = i - 1
                while j >= 0 and (scores[j] < sc or (scores[j] == sc and order[j] > low)):
                    order[j + 1] = order[j]
                    scores[j + 1] = scores[j]
                    j -= 1
                order[j + 1] = low
                scores[j + 1] = sc

        cdef int best, target, v
        if mv == RESOLVER:
            best = -_MOVE_BASE
            target = _MOVE_BASE - _popcount(r) - 1
            for i in range(<int> order.size()):
                v = self.rec_value(r | order[i], s, SPOILER)
                if v > best:
                    best = v
                    if best == target:
                        break
        else:
            best = _MOVE_BASE
            target = -(_MOVE_BASE - _popcount(s) - 1)
            for i in range(<int> order.size()):
                v = self.rec_value(r, s | order[i], RESOLVER)
                if v < best:
                    best = v
                    if best == target:
                        break
        if _popcount(free) > _MEMO_MIN_FREE:
            self.memo[key] = best
        return best


def solve_winner(int n, masks, rmask, smask, int mover):
    """Winner (RESOLVER or SPOILER) under perfect play."""
    cdef _Search s = _Search(n, masks)
    return s.rec_winner(<uint64_t> rmask, <uint64_t> smask, mover)


def solve_value(int n, masks, rmask, smask, int mover, bint heuristic=False):
    """(winner, winner_moves) under the lexicographic optimality convention."""
    cdef _Search s = _Search(n, masks, heuristic)
    cdef int v = s.rec_value(<uint64_t> rmask, <uint64_t> smask, mover)
    if v > 0:
        return RESOLVER, _MOVE_BASE - v
    return SPOILER, _MOVE_BASE + v
