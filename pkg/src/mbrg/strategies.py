"""Constructive winning strategies and an exhaustive strategy validator.

Each strategy is a deterministic move-picker.  Resolver strategies for
corona products are built from per-copy claiming plans (pair blocks, cycle
block schemes, exact strictly-locating play, or a solver-backed picker)
lifted by a shared scheduler: answer a mandated reply wherever one is
pending, otherwise make progress in the lowest-index unfinished copy,
otherwise claim the lowest unclaimed vertex.  Extra opponent moves only
shrink options (No-Skip), so any legal filler is safe.

The validator proves a strategy beats *every* opponent line by exhaustive
search over opponent moves with the strategy's moves fixed, memoized on the
claimed-set pair (refined by the strategy's declared context when its picks
depend on more than the current position).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Optional

from .engine import (
    GameState,
    OutcomeClass,
    Player,
    Transcript,
    best_move_masks,
    outcome,
)
from .graphs import Graph, GraphError, induced_subgraph
from .resolving import (
    PairingSystem,
    as_mask,
    is_pairing_resolving,
    is_resolving,
    is_strictly_locating,
    pair_separators,
)

Move = tuple[Player, int]
History = tuple[Move, ...]


class StrategyError(ValueError):
    """Strategy preconditions violated (wrong factor, bad pairing, ...)."""


@dataclass(frozen=True)
class Strategy:
    """A named deterministic move-picker for one player.

    `picker(g, state, history)` returns (vertex, rationale-tag).  Pickers are
    pure functions of the state plus whatever `context(g, history)` captures,
    which is what makes validator memoization on claimed sets sound.
    """

    name: str
    role: Player
    picker: Callable[[Graph, GameState, History], tuple[int, str]]
    context_fn: Optional[Callable[[Graph, History], Hashable]] = None

    def pick(self, g: Graph, state: GameState, history: History = ()) -> int:
        return self.picker(g, state, history)[0]

    def pick_explained(
        self, g: Graph, state: GameState, history: History = ()
    ) -> tuple[int, str]:
        return self.picker(g, state, history)

    def context(self, g: Graph, history: History) -> Hashable:
        if self.context_fn is None:
            return ()
        return self.context_fn(g, history)


def _lowest_free(g: Graph, state: GameState) -> int:
    claimed = state.claimed()
    for v in range(g.n):
        if v not in claimed:
            return v
    raise StrategyError("no unclaimed vertex remains")


# ---------------------------------------------------------------------------
# per-copy claiming plans (Resolver side)
# ---------------------------------------------------------------------------


class PairBlocksPlan:
    """Claim one vertex of each disjoint pair block, replying in a block as
    soon as the opponent enters it."""

    def __init__(self, blocks: list[tuple[int, int]], tag: str = "block transversal"):
        self.blocks = blocks
        self.tag = tag

    def reply(self, r: frozenset[int], s: frozenset[int], ctx=None):
        for a, b in self.blocks:
            if a in r or b in r:
                continue
            sa, sb = a in s, b in s
            if sa and not sb:
                return b, self.tag
            if sb and not sa:
                return a, self.tag
        return None

    def progress(self, r, s, ctx=None):
        for a, b in self.blocks:
            if a in r or b in r:
                continue
            if a not in s:
                return a, self.tag
            if b not in s:
                return b, self.tag
        return None

    def satisfied(self, r, s, ctx=None) -> bool:
        return all(a in r or b in r for a, b in self.blocks)


def _minimal_strictly_locating_masks(h: Graph) -> tuple[int, ...]:
    """Inclusion-minimal strictly locating sets of h, as bitmasks.

    Strictly locating sets are closed under supersets (a witness vertex for
    any trace clash or full-trace violation survives enlargement), so the
    minimal ones carry the whole family.
    """
    from itertools import combinations

    minimal: list[int] = []
    for size in range(1, h.n + 1):
        for comb in combinations(range(h.n), size):
            m = 0
            for v in comb:
                m |= 1 << v
            if any(x & ~m == 0 for x in minimal):
                continue
            if is_strictly_locating(h, set(comb)):
                minimal.append(m)
    return tuple(minimal)


class LocatingGoalPlan:
    """Exact play toward a strictly locating set of one copy.

    The copy-local game is Maker-Breaker with the strictly locating sets as
    the winning family; on odd paths and cycles Resolver wins it even moving
    second.  The plan replies inside the copy exactly when waiting would
    flip the local game (letting the opponent move twice loses), and its
    progress moves are ones that keep the opponent-to-move position won.
    """

    def __init__(self, h: Graph, vertices: list[int], tag: str = "locating play"):
        self.goals = _minimal_strictly_locating_masks(h)
        self.vertices = vertices  # global ids, in local index order
        self.index = {v: i for i, v in enumerate(vertices)}
        self.width = h.n
        self.full = (1 << h.n) - 1
        self.tag = tag
        # corona copies are contiguous id ranges; then local masks are shifts
        self.start = vertices[0] if vertices == list(
            range(vertices[0], vertices[0] + len(vertices))) else None
        self._memo: dict[tuple[int, int, bool], bool] = {}
        # decisions are pure functions of the local position, so cache them
        self._reply_cache: dict[int, Optional[tuple[int, str]]] = {}
        self._progress_cache: dict[int, Optional[tuple[int, str]]] = {}
        self._goal_cache: dict[int, bool] = {}

    def _masks(self, r, s) -> tuple[int, int]:
        if self.start is not None:
            rmask = getattr(r, "mask", None)
            if rmask is not None:
                return ((rmask >> self.start) & self.full,
                        (s.mask >> self.start) & self.full)
        rm = sm = 0
        for v, i in self.index.items():
            if v in r:
                rm |= 1 << i
            elif v in s:
                sm |= 1 << i
        return rm, sm

    def _contains_goal(self, rm: int) -> bool:
        hit = self._goal_cache.get(rm)
        if hit is None:
            hit = any(goal & ~rm == 0 for goal in self.goals)
            self._goal_cache[rm] = hit
        return hit

    def _win(self, rm: int, sm: int, we_move: bool) -> bool:
        """True iff we can still complete a goal set from this local position."""
        if self._contains_goal(rm):
            return True
        if all(goal & sm for goal in self.goals):
            return False
        free = self.full & ~(rm | sm)
        if not free:
            return False
        key = (rm, sm, we_move)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        bits = []
        f = free
        while f:
            b = f & -f
            f ^= b
            bits.append(b)
        if we_move:
            out = any(self._win(rm | b, sm, False) for b in bits)
        else:
            out = all(self._win(rm, sm | b, True) for b in bits)
        self._memo[key] = out
        return out

    def _winning_move(self, rm: int, sm: int) -> Optional[int]:
        for i in range(len(self.vertices)):
            b = 1 << i
            if (rm | sm) & b:
                continue
            if self._win(rm | b, sm, False):
                return self.vertices[i]
        return None

    def satisfied(self, r, s, ctx=None) -> bool:
        rm, _ = self._masks(r, s)
        return self._contains_goal(rm)

    def reply(self, r, s, ctx=None):
        rm, sm = self._masks(r, s)
        key = rm << self.width | sm
        try:
            return self._reply_cache[key]
        except KeyError:
            pass
        out = None
        if not self._contains_goal(rm) and not self._win(rm, sm, False):
            # not safe to wait: the copy would not survive another opponent
            # move, so act now (locally lost copies fall through as None)
            v = self._winning_move(rm, sm)
            if v is not None:
                out = (v, self.tag)
        self._reply_cache[key] = out
        return out

    def progress(self, r, s, ctx=None):
        rm, sm = self._masks(r, s)
        key = rm << self.width | sm
        try:
            return self._progress_cache[key]
        except KeyError:
            pass
        out = None
        if not self._contains_goal(rm):
            v = self._winning_move(rm, sm)
            if v is not None:
                out = (v, self.tag)
        self._progress_cache[key] = out
        return out


class AdjacentPairPlan:
    """Claim two adjacent vertices of a small cycle copy (k in {4, 5})."""

    def __init__(self, ring: list[int]):
        self.ring = ring  # global ids in cycle order
        self.k = len(ring)

    def _nbrs(self, v):
        i = self.ring.index(v)
        return (self.ring[(i - 1) % self.k], self.ring[(i + 1) % self.k])

    def satisfied(self, r, s, ctx=None) -> bool:
        return any(
            self.ring[i] in r and self.ring[(i + 1) % self.k] in r
            for i in range(self.k)
        )

    def reply(self, r, s, ctx=None):
        if self.satisfied(r, s):
            return None
        mine = [v for v in self.ring if v in r]
        theirs = [v for v in self.ring if v in s]
        if not theirs:
            return None
        if not mine:
            # follow the opponent in: prefer a vertex with both neighbours free
            for v in self.ring:
                if v in s or v in r:
                    continue
                a, b = self._nbrs(v)
                if a not in s and b not in s:
                    return v, "adjacent pair"
            for v in self.ring:
                if v not in s and v not in r:
                    return v, "adjacent pair"
            return None
        # we hold vertices but no adjacent pair yet: grab a completing
        # neighbour while one remains
        free_completions = [
            w
            for v in mine
            for w in self._nbrs(v)
            if w not in r and w not in s
        ]
        if len(set(free_completions)) == 1:
            return free_completions[0], "adjacent pair"
        if free_completions and any(w in s for v in mine for w in self._nbrs(v)):
            return sorted(set(free_completions))[0], "adjacent pair"
        return None

    def progress(self, r, s, ctx=None):
        if self.satisfied(r, s):
            return None
        mine = [v for v in self.ring if v in r]
        if mine:
            for v in mine:
                for w in self._nbrs(v):
                    if w not in r and w not in s:
                        return w, "adjacent pair"
        for v in self.ring:
            if v in s or v in r:
                continue
            a, b = self._nbrs(v)
            if a not in s and b not in s:
                return v, "adjacent pair"
        for v in self.ring:
            if v not in s and v not in r:
                return v, "adjacent pair"
        return None


class SolverPlan:
    """Solver-backed local play: optimal moves of the exact solver on the
    copy's own subgame (either the bare copy H_i or the cone over it)."""

    def __init__(self, sub: Graph, vertices: list[int], tag: str):
        self.sub = sub
        self.vertices = vertices  # global ids, in local index order
        self.index = {v: i for i, v in enumerate(vertices)}
        self.tag = tag

    def _masks(self, r, s):
        rm = sm = 0
        for v, i in self.index.items():
            if v in r:
                rm |= 1 << i
            elif v in s:
                sm |= 1 << i
        return rm, sm

    def _local_resolved(self, rm) -> bool:
        return all(rm & m for m in pair_separators(self.sub))

    def satisfied(self, r, s, ctx=None) -> bool:
        rm, _ = self._masks(r, s)
        return self._local_resolved(rm)

    def reply(self, r, s, ctx=None):
        rm, sm = self._masks(r, s)
        if self._local_resolved(rm):
            return None
        if bin(sm).count("1") <= bin(rm).count("1"):
            return None  # we are not behind here; no mandated reply
        v, _ = best_move_masks(self.sub, rm, sm, Player.RESOLVER)
        return self.vertices[v], self.tag

    def progress(self, r, s, ctx=None):
        rm, sm = self._masks(r, s)
        if self._local_resolved(rm):
            return None
        v, _ = best_move_masks(self.sub, rm, sm, Player.RESOLVER)
        return self.vertices[v], self.tag


# ---------------------------------------------------------------------------
# lifting per-copy plans over the corona layout
# ---------------------------------------------------------------------------


def _require_corona(g: Graph) -> tuple[int, int]:
    if g.corona_shape is None:
        raise StrategyError("strategy needs a corona-product graph")
    return g.corona_shape


def _lift_plans(name: str, plan_factory, context_fn=None) -> Strategy:
    """Resolver strategy from a per-copy plan factory (graph -> list of plans)."""

    cache: dict[Graph, list] = {}

    def picker(g: Graph, state: GameState, history: History) -> tuple[int, str]:
        if g not in cache:
            cache[g] = plan_factory(g)
        plans = cache[g]
        ctxs = _plan_contexts(g, history, plans, context_fn)
        r, s = state.resolver, state.spoiler
        for plan, ctx in zip(plans, ctxs):
            hit = plan.reply(r, s, ctx)
            if hit is not None:
                return hit
        for plan, ctx in zip(plans, ctxs):
            if not plan.satisfied(r, s, ctx):
                hit = plan.progress(r, s, ctx)
                if hit is not None:
                    return hit
        return _lowest_free(g, state), "filler"

    strategy_context = None
    if context_fn is not None:

        def strategy_context(g: Graph, history: History) -> Hashable:
            return context_fn(g, history)

    return Strategy(name, Player.RESOLVER, picker, strategy_context)


def _plan_contexts(g, history, plans, context_fn):
    if context_fn is None:
        return [None] * len(plans)
    ctx = context_fn(g, history)
    return list(ctx)


# ---------------------------------------------------------------------------
# strategy factories
# ---------------------------------------------------------------------------


def pairing_strategy(g: Graph, a: PairingSystem) -> Strategy:
    """Resolver: whenever the opponent claims one endpoint of a pair, reply
    with the other; otherwise claim an endpoint of an untouched pair."""
    if not is_pairing_resolving(g, a):
        raise StrategyError("pairing system is not pairing resolving")
    plan = PairBlocksPlan(list(a.pairs), tag="pairing reply")

    def picker(gg: Graph, state: GameState, history: History) -> tuple[int, str]:
        r, s = state.resolver, state.spoiler
        hit = plan.reply(r, s)
        if hit is not None:
            return hit
        hit = plan.progress(r, s)
        if hit is not None:
            return hit
        return _lowest_free(gg, state), "filler"

    return Strategy("pairing", Player.RESOLVER, picker)


def _copy_ids(g: Graph, i: int) -> list[int]:
    return list(g.copy_vertices(i))


def path_resolver_strategy(k: int) -> Strategy:
    """Resolver strategy for G (*) P_k copies (k != 5).

    k=1 pairs each base vertex with its pendant; k in {2,3,4} and even k>=6
    use pair blocks; odd k>=7 plays each copy's strictly-locating game
    exactly (the fixed tail-triple reply rules lose some lines, see the
    k=7 counterexample in the validator tests).
    """
    if k == 5:
        raise StrategyError("no Resolver path strategy for k=5 (Spoiler wins)")
    if k < 1:
        raise StrategyError("k must be >= 1")

    def factory(g: Graph):
        ng, nh = _require_corona(g)
        plans = []
        for i in range(ng):
            ids = _copy_ids(g, i)
            if k == 1:
                plans.append(PairBlocksPlan([(i, ids[0])]))
            elif k == 2:
                plans.append(PairBlocksPlan([(ids[0], ids[1])]))
            elif k == 3:
                plans.append(PairBlocksPlan([(ids[0], ids[2])]))
            elif k == 4:
                plans.append(PairBlocksPlan([(ids[0], ids[2]), (ids[1], ids[3])]))
            elif k % 2 == 0:
                blocks = [(ids[2 * j], ids[2 * j + 1]) for j in range(k // 2)]
                plans.append(PairBlocksPlan(blocks))
            else:
                h = induced_subgraph(g, ids)
                plans.append(LocatingGoalPlan(h, ids))
        return plans

    case = {1: 1, 2: 2, 3: 3, 4: 4}.get(k, 6 if k % 2 == 0 else 7)
    return _lift_plans(f"paths-case{case}", factory)


def cycle_resolver_strategy(k: int) -> Strategy:
    """Resolver strategy for G (*) C_k copies (k >= 4): adjacent pair for
    k in {4,5}, pair-block transversal for even k >= 6, exact play of the
    copy-local strictly-locating game for odd k >= 7 (the fixed Z'-block
    reply rules lose some lines, see the k=7 counterexample in the
    validator tests)."""
    if k == 3:
        raise StrategyError("no Resolver cycle strategy for k=3 (Spoiler wins)")
    if k < 4:
        raise StrategyError("k must be >= 4")

    def factory(g: Graph):
        ng, nh = _require_corona(g)
        plans = []
        for i in range(ng):
            ids = _copy_ids(g, i)
            if k in (4, 5):
                plans.append(AdjacentPairPlan(ids))
            elif k % 2 == 0:
                blocks = [(ids[2 * j], ids[2 * j + 1]) for j in range(k // 2)]
                plans.append(PairBlocksPlan(blocks))
            else:
                h = induced_subgraph(g, ids)
                plans.append(LocatingGoalPlan(h, ids))
        return plans

    name = "cycles-small" if k in (4, 5) else ("cycles-even" if k % 2 == 0 else "cycles-odd")
    return _lift_plans(name, factory)


def copywise_strategy(g: Graph, mode: str = "h") -> Strategy:
    """Resolver: follow Spoiler into whichever copy she plays, running the
    exact solver's winning line inside each copy independently.

    mode="h"   needs o(H)=R and diam(H) <= 2 (copy distances agree with H);
    mode="hhat" needs o(K1 (*) H)=R and plays on each cone copy incl. its base.
    """
    ng, nh = _require_corona(g)
    h = induced_subgraph(g, list(g.copy_vertices(0)))
    if mode == "h":
        if h.n >= 2:
            if outcome(h) is not OutcomeClass.R:
                raise StrategyError("copywise mode=h needs o(H)=R")
            if h.diameter() > 2:
                raise StrategyError("copywise mode=h needs diam(H) <= 2")
    elif mode == "hhat":
        from .graphs import generate, corona

        cone = corona(generate("k1"), h)
        if outcome(cone) is not OutcomeClass.R:
            raise StrategyError("copywise mode=hhat needs o(K1 (*) H)=R")
    else:
        raise StrategyError(f"unknown copywise mode {mode!r}")

    def factory(gg: Graph):
        plans = []
        for i in range(ng):
            ids = _copy_ids(gg, i)
            if mode == "h":
                sub = induced_subgraph(gg, ids)
                plans.append(SolverPlan(sub, ids, "optimal (solver)"))
            else:
                verts = [i] + ids
                sub = induced_subgraph(gg, verts)
                plans.append(SolverPlan(sub, verts, "optimal (solver)"))
        return plans

    return _lift_plans(f"copywise-{mode}", factory)


def _spoiler_target(g: Graph, state: GameState) -> Optional[int]:
    """Copy Spoiler attacks: the one she already plays in, else the lowest
    copy Resolver has not touched."""
    ng, nh = g.corona_shape
    for i in range(ng):
        if any(v in state.spoiler for v in g.copy_vertices(i)):
            return i
    for i in range(ng):
        if not any(v in state.resolver for v in g.copy_vertices(i)):
            return i
    return None


def spoiler_copy_strategy(g: Graph) -> Strategy:
    """Spoiler: pick a copy Resolver has not opened and win the restricted
    game there with the exact solver's line, ignoring moves elsewhere.
    Needs o(H) in {N, S} and n(G) >= 2."""
    ng, nh = _require_corona(g)
    if ng < 2:
        raise StrategyError("spoiler copy strategy needs n(G) >= 2")
    h = induced_subgraph(g, list(g.copy_vertices(0)))
    if h.n < 2 or outcome(h) is OutcomeClass.R:
        raise StrategyError("spoiler copy strategy needs o(H) in {N, S}")

    def picker(gg: Graph, state: GameState, history: History) -> tuple[int, str]:
        i = _spoiler_target(gg, state)
        if i is not None:
            ids = _copy_ids(gg, i)
            index = {v: j for j, v in enumerate(ids)}
            rm = sm = 0
            for v, j in index.items():
                if v in state.resolver:
                    rm |= 1 << j
                elif v in state.spoiler:
                    sm |= 1 << j
            if not any(m & ~sm == 0 for m in pair_separators(h)):
                v, _ = best_move_masks(h, rm, sm, Player.SPOILER)
                return ids[v], "spoiler copy line"
        return _lowest_free(gg, state), "filler"

    return Strategy("spoiler-copy", Player.SPOILER, picker)


def spoiler_p5_strategy() -> Strategy:
    """Spoiler's explicit line on G (*) P_5: open an untouched copy at its
    middle vertex, then complete {middle, one end, one inner} against any
    Resolver replies (symmetric cases mirrored)."""

    def picker(g: Graph, state: GameState, history: History) -> tuple[int, str]:
        ng, nh = _require_corona(g)
        if nh != 5:
            raise StrategyError("spoiler-p5 needs second factor P5")
        i = _spoiler_target(g, state)
        if i is not None:
            ids = _copy_ids(g, i)
            r = {j for j, v in enumerate(ids) if v in state.resolver}
            s = {j for j, v in enumerate(ids) if v in state.spoiler}
            pick = _p5_line(r, s)
            if pick is not None:
                return ids[pick], "spoiler-p5"
        return _lowest_free(g, state), "filler"

    return Strategy("spoiler-p5", Player.SPOILER, picker)


def _p5_line(r: set[int], s: set[int]) -> Optional[int]:
    """Local indices 0..4 = path vertices v1..v5; returns Spoiler's move."""
    if not s:
        return 2 if 2 not in r else None
    if s == {2}:
        if 0 in r:
            return 4 if 4 not in r else None
        if 4 in r:
            return 0 if 0 not in r else None
        if 1 in r:
            return 3 if 3 not in r else None
        if 3 in r:
            return 1 if 1 not in r else None
        return 4  # free turn: head for an end vertex
    if s == {2, 4}:
        for a, b in ((1, 3), (3, 1)):
            if a in r and b not in r:
                return b
        return 1 if 1 not in r else (3 if 3 not in r else None)
    if s == {0, 2}:
        for a, b in ((3, 1), (1, 3)):
            if a in r and b not in r:
                return b
        return 3 if 3 not in r else (1 if 1 not in r else None)
    if s == {2, 3}:
        for a, b in ((0, 4), (4, 0)):
            if a in r and b not in r:
                return b
        return 4 if 4 not in r else (0 if 0 not in r else None)
    if s == {1, 2}:
        for a, b in ((4, 0), (0, 4)):
            if a in r and b not in r:
                return b
        return 0 if 0 not in r else (4 if 4 not in r else None)
    return None


# ---------------------------------------------------------------------------
# the strategy catalog, addressable by name
# ---------------------------------------------------------------------------


def _is_corona_of(g: Graph, family: str) -> Optional[int]:
    """Copy order when g is a corona whose copies are path/cycle, else None."""
    if g.corona_shape is None:
        return None
    from .graphs import generate

    nh = g.corona_shape[1]
    h = induced_subgraph(g, list(g.copy_vertices(0)))
    try:
        want = generate(family, nh)
    except GraphError:
        return None
    return nh if h == want else None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    role: Player
    applies: Callable[[Graph], bool]
    build: Callable[[Graph], Strategy]


def _path_entry(case: int, pred) -> CatalogEntry:
    return CatalogEntry(
        f"paths-case{case}",
        Player.RESOLVER,
        lambda g: (k := _is_corona_of(g, "path")) is not None and pred(k),
        lambda g: path_resolver_strategy(g.corona_shape[1]),
    )


CATALOG: list[CatalogEntry] = [
    _path_entry(1, lambda k: k == 1),
    _path_entry(2, lambda k: k == 2),
    _path_entry(3, lambda k: k == 3),
    _path_entry(4, lambda k: k == 4),
    _path_entry(6, lambda k: k >= 6 and k % 2 == 0),
    _path_entry(7, lambda k: k >= 7 and k % 2 == 1),
    CatalogEntry(
        "cycles-small",
        Player.RESOLVER,
        lambda g: _is_corona_of(g, "cycle") in (4, 5),
        lambda g: cycle_resolver_strategy(g.corona_shape[1]),
    ),
    CatalogEntry(
        "cycles-even",
        Player.RESOLVER,
        lambda g: (k := _is_corona_of(g, "cycle")) is not None and k >= 6 and k % 2 == 0,
        lambda g: cycle_resolver_strategy(g.corona_shape[1]),
    ),
    CatalogEntry(
        "cycles-odd",
        Player.RESOLVER,
        lambda g: (k := _is_corona_of(g, "cycle")) is not None and k >= 7 and k % 2 == 1,
        lambda g: cycle_resolver_strategy(g.corona_shape[1]),
    ),
    CatalogEntry(
        "spoiler-p5",
        Player.SPOILER,
        lambda g: _is_corona_of(g, "path") == 5,
        lambda g: spoiler_p5_strategy(),
    ),
    CatalogEntry(
        "spoiler-copy",
        Player.SPOILER,
        lambda g: _spoiler_copy_applies(g),
        lambda g: spoiler_copy_strategy(g),
    ),
    CatalogEntry(
        "copywise-h",
        Player.RESOLVER,
        lambda g: _copywise_applies(g, "h"),
        lambda g: copywise_strategy(g, "h"),
    ),
    CatalogEntry(
        "copywise-hhat",
        Player.RESOLVER,
        lambda g: _copywise_applies(g, "hhat"),
        lambda g: copywise_strategy(g, "hhat"),
    ),
]


def _spoiler_copy_applies(g: Graph) -> bool:
    if g.corona_shape is None or g.corona_shape[0] < 2 or g.corona_shape[1] < 2:
        return False
    try:
        spoiler_copy_strategy(g)
        return True
    except (StrategyError, GraphError):
        return False


def _copywise_applies(g: Graph, mode: str) -> bool:
    if g.corona_shape is None:
        return False
    try:
        copywise_strategy(g, mode)
        return True
    except (StrategyError, GraphError):
        return False


def catalog_for(g: Graph) -> list[CatalogEntry]:
    """Catalog entries applicable to a given graph."""
    return [e for e in CATALOG if e.applies(g)]


def strategy_by_name(g: Graph, name: str) -> Strategy:
    for e in CATALOG:
        if e.name == name:
            if not e.applies(g):
                raise StrategyError(f"strategy {name!r} does not apply to {g!r}")
            return e.build(g)
    raise StrategyError(f"unknown strategy {name!r}")


# ---------------------------------------------------------------------------
# exhaustive validation
# ---------------------------------------------------------------------------


class _MaskSet:
    """Bitmask-backed read-only vertex set (membership and iteration only)."""

    __slots__ = ("mask",)

    def __init__(self, mask: int):
        self.mask = mask

    def __contains__(self, v) -> bool:
        return self.mask >> v & 1 == 1

    def __iter__(self):
        m = self.mask
        while m:
            b = m & -m
            m ^= b
            yield b.bit_length() - 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")


class _MaskState:
    """GameState stand-in the validator hands to pickers: same read surface
    (resolver / spoiler / first / to_move / claimed), no per-node sets."""

    __slots__ = ("resolver", "spoiler", "first", "to_move")

    def __init__(self, rm: int, sm: int, first: Player, to_move: Player):
        self.resolver = _MaskSet(rm)
        self.spoiler = _MaskSet(sm)
        self.first = first
        self.to_move = to_move

    def claimed(self) -> _MaskSet:
        return _MaskSet(self.resolver.mask | self.spoiler.mask)


@dataclass
class ValidationResult:
    wins_all: bool
    counterexample: Optional[Transcript] = None

    def __bool__(self) -> bool:
        return self.wins_all


def validate_strategy(
    g: Graph, strategy: Strategy, first: Player, cap: int = 18
) -> ValidationResult:
    """Exhaustive search over all opponent moves with the strategy's moves
    fixed; memoized on (claimed sets, strategy context).  Returns wins-all or
    a shortest counterexample transcript."""
    if g.n > cap:
        raise GraphError(f"order {g.n} exceeds validation cap {cap}")
    owner = strategy.role
    n = g.n
    full = (1 << n) - 1
    needs_history = strategy.context_fn is not None
    all_masks = tuple(pair_separators(g))
    # separators through each vertex: a Spoiler claim can only complete one
    # of these, so the Spoiler-terminal check scans just the last move's
    # masks; masks larger than Spoiler's maximum final set never complete
    spoiler_max = (n + 1) // 2
    masks_by_bit = tuple(
        tuple(
            m for m in all_masks
            if m >> v & 1 and bin(m).count("1") <= spoiler_max
        )
        for v in range(n)
    )
    # memo: key -> WIN (owner wins all lines) or a shortest losing line
    memo: dict[Hashable, object] = {}
    WIN = object()
    RES, SPO = Player.RESOLVER, Player.SPOILER

    def child(rm, sm, turn, alive, v, bit, nh):
        """One move by `turn`, short-circuiting terminals after the move."""
        if turn is RES:
            nalive = tuple(m for m in alive if not m & bit)
            if not nalive:
                return None if owner is RES else []
            return rec(rm | bit, sm, SPO, nalive, nh)
        nsm = sm | bit
        for m in masks_by_bit[v]:
            if m & ~nsm == 0:
                return [] if owner is RES else None
        return rec(rm, nsm, RES, alive, nh)

    def rec(rm, sm, turn, alive, history):
        """alive = separator masks not yet hit by the Resolver set; callers
        have already ruled out both terminal conditions.  Returns None if
        owner wins every continuation, else a shortest losing line."""
        key = (rm << n | sm) << 1 | (turn is RES)
        if needs_history:
            key = (key, strategy.context(g, history))
        cached = memo.get(key)
        if cached is not None:
            return None if cached is WIN else list(cached)
        if turn is owner:
            state = _MaskState(rm, sm, first, turn)
            v, _ = strategy.pick_explained(g, state, history)
            bit = 1 << v
            if not 0 <= v < n or (rm | sm) & bit:
                raise StrategyError(f"{strategy.name} picked illegal vertex {v}")
            nh = history + ((turn, v),) if needs_history else ()
            sub = child(rm, sm, turn, alive, v, bit, nh)
            result = None if sub is None else [(turn, v)] + sub
        else:
            worst = None
            free = full & ~(rm | sm)
            while free:
                bit = free & -free
                free ^= bit
                v = bit.bit_length() - 1
                nh = history + ((turn, v),) if needs_history else ()
                sub = child(rm, sm, turn, alive, v, bit, nh)
                if sub is not None:
                    line = [(turn, v)] + sub
                    if worst is None or len(line) < len(worst):
                        worst = line
            result = worst
        memo[key] = WIN if result is None else tuple(result)
        return result

    if not all_masks:
        return ValidationResult(owner is Player.RESOLVER)
    loss = rec(0, 0, first, all_masks, ())
    if loss is None:
        return ValidationResult(True)
    return ValidationResult(False, Transcript(first, loss))
