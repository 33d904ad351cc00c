"""Resolving, locating, and pairing-set predicates plus brute-force optimizers.

All predicates are pure functions over immutable graphs.  A vertex set is a
VertexSet (a bitset with a fixed capacity) or anything iterable over vertex
ids; internally everything runs on machine-word bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graphs import Graph, GraphError


class VertexSet:
    """Fixed-capacity set of vertex ids backed by a single bitmask."""

    __slots__ = ("capacity", "mask")

    def __init__(self, capacity: int, members: Iterable[int] = ()):
        mask = 0
        for v in members:
            if not 0 <= v < capacity:
                raise ValueError(f"vertex {v} outside capacity {capacity}")
            mask |= 1 << v
        self.capacity = capacity
        self.mask = mask

    @classmethod
    def from_mask(cls, capacity: int, mask: int) -> "VertexSet":
        vs = cls(capacity)
        vs.mask = mask & ((1 << capacity) - 1)
        return vs

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.capacity and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def rank(self, v: int) -> int:
        """Number of members strictly below v."""
        return bin(self.mask & ((1 << v) - 1)).count("1")

    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.capacity, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.capacity, self.mask & other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet.from_mask(self.capacity, ~self.mask)

    __or__ = union
    __and__ = intersection

    def __eq__(self, other):
        return (
            isinstance(other, VertexSet)
            and self.capacity == other.capacity
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.capacity, self.mask))

    def __repr__(self):
        return f"VertexSet({self.capacity}, {{{', '.join(map(str, self))}}})"


def as_mask(g: Graph, s) -> int:
    """Coerce a VertexSet / iterable of ids / bitmask into a bitmask."""
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        return s
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        mask |= 1 << v
    return mask


# -- separator masks: the workhorse shared with the game engine -----------------


def pair_separators(g: Graph) -> list[int]:
    """For each vertex pair x<y (lexicographic), the bitmask of vertices z
    with d(x,z) != d(y,z).  A set W is resolving iff it hits every mask.

    Each mask contains x and y themselves (d(x,x)=0 < d(y,x)), so masks are
    never empty.  Unreachable pairs use the sentinel, so the predicate also
    totalizes on disconnected graphs (non-paper behaviour, but consistent).
    """
    dist = g.distances()
    masks = []
    for x in range(g.n):
        dx = dist[x]
        for y in range(x + 1, g.n):
            dy = dist[y]
            m = 0
            for z in range(g.n):
                if dx[z] != dy[z]:
                    m |= 1 << z
            masks.append(m)
    return masks


def is_resolving(g: Graph, w) -> bool:
    """True iff the distance vectors to w are pairwise distinct over all vertices."""
    wm = as_mask(g, w)
    return all(wm & m for m in pair_separators(g))


def metric_dimension(g: Graph, bound: int = 16) -> tuple[int, VertexSet]:
    """Smallest resolving-set cardinality with a lexicographically-first witness.

    Exhaustive sweep by increasing size with a twin pruning pass: vertices
    with identical distance rows must contribute all but one member of each
    twin class to any resolving set, which prunes most candidate subsets on
    twin-heavy graphs (cliques, stars).
    """
    if not g.is_connected():
        raise GraphError("metric dimension requires a connected graph")
    if g.n > bound:
        raise GraphError(f"order {g.n} exceeds exhaustive-sweep bound {bound}")
    masks = pair_separators(g)

    # twin classes: pairs separated only by their two endpoints
    forced_lower = 0
    twin_pairs = []
    idx = 0
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if masks[idx] == (1 << x) | (1 << y):
                twin_pairs.append((x, y))
            idx += 1

    for size in range(0, g.n + 1):
        if size < len(_twin_lower_bound(twin_pairs)):
            continue
        for subset in combinations(range(g.n), size):
            wm = 0
            for v in subset:
                wm |= 1 << v
            if any(wm & ((1 << x) | (1 << y)) == 0 for x, y in twin_pairs):
                continue
            if all(wm & m for m in masks):
                return size, VertexSet(g.n, subset)
    raise AssertionError("the full vertex set always resolves")  # pragma: no cover


def _twin_lower_bound(twin_pairs) -> set[int]:
    # any resolving set meets every twin pair; a greedy vertex cover of the
    # twin-pair graph lower-bounds nothing exactly, so only use it as a skip
    covered: set[int] = set()
    need: set[int] = set()
    for x, y in twin_pairs:
        if x not in need and y not in need:
            need.add(x)
    return need


def is_locating(g: Graph, s) -> bool:
    """N(u) ∩ S pairwise distinct over all vertices u outside S."""
    sm = as_mask(g, s)
    seen = {}
    for u in range(g.n):
        if sm >> u & 1:
            continue
        trace = g.adjacency_mask(u) & sm
        if trace in seen:
            return False
        seen[trace] = u
    return True


def is_strictly_locating(g: Graph, s) -> bool:
    """Locating, and no outside vertex is adjacent to all of S."""
    sm = as_mask(g, s)
    if not is_locating(g, sm):
        return False
    for u in range(g.n):
        if sm >> u & 1:
            continue
        if g.adjacency_mask(u) & sm == sm:
            return False
    return True


# -- pairing resolving sets ------------------------------------------------------


@dataclass(frozen=True)
class PairingSystem:
    """Disjoint unordered vertex-id pairs; all 2k endpoints distinct."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        norm = []
        for u, v in self.pairs:
            if u == v:
                raise ValueError(f"degenerate pair ({u},{v})")
            if u in seen or v in seen:
                raise ValueError("pairs overlap")
            seen.update((u, v))
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "pairs", tuple(norm))

    def __len__(self):
        return len(self.pairs)

    def transversals(self) -> Iterator[tuple[int, ...]]:
        k = len(self.pairs)
        for bits in range(1 << k):
            yield tuple(self.pairs[i][bits >> i & 1] for i in range(k))


def is_pairing_resolving(g: Graph, a: PairingSystem) -> bool:
    """All 2^k transversals (one endpoint per pair) are resolving. Exhaustive."""
    masks = pair_separators(g)
    for t in a.transversals():
        wm = 0
        for v in t:
            wm |= 1 << v
        if not all(wm & m for m in masks):
            return False
    return True


def find_pairing_resolving(
    g: Graph, k: int, bound: int = 14
) -> Optional[PairingSystem]:
    """Search for a pairing resolving set of k disjoint pairs, or None.

    Pairs are explored in lexicographic order; the first hit is returned.
    Pruning: a partial transversal padded with every still-free vertex is a
    superset of any completion, so if even that fails to resolve, the prefix
    is dead.  Failed transversal masks are memoized across branches.
    """
    if g.n > bound:
        raise GraphError(f"order {g.n} exceeds pairing-search bound {bound}")
    if 2 * k > g.n:
        return None
    masks = pair_separators(g)
    full = (1 << g.n) - 1
    failed: set[int] = set()

    def resolving_mask(wm: int) -> bool:
        if wm in failed:
            return False
        ok = all(wm & m for m in masks)
        if not ok:
            failed.add(wm)
        return ok

    def prefix_alive(pairs: list[tuple[int, int]], used: int) -> bool:
        free = full & ~used
        for bits in range(1 << len(pairs)):
            wm = free
            for i, (u, v) in enumerate(pairs):
                wm |= 1 << (v if bits >> i & 1 else u)
            if not resolving_mask(wm):
                return False
        return True

    def search(pairs: list[tuple[int, int]], used: int, min_u: int):
        if len(pairs) == k:
            ps = PairingSystem(tuple(pairs))
            if is_pairing_resolving(g, ps):
                return ps
            return None
        for u in range(min_u, g.n):
            if used >> u & 1:
                continue
            for v in range(u + 1, g.n):
                if used >> v & 1:
                    continue
                pairs.append((u, v))
                used2 = used | 1 << u | 1 << v
                if prefix_alive(pairs, used2):
                    hit = search(pairs, used2, u + 1)
                    if hit is not None:
                        return hit
                pairs.pop()
        return None

    return search([], 0, 0)
