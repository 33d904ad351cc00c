"""HTTP session service: play the Maker-Breaker resolving game live.

Sessions are held in memory (optionally mirrored to one JSON document each);
the move transcript is the canonical state and everything else — claimed
sets, turn, winner, meters — is recomputed from it on demand.  Each session's
mutations are serialized by a per-session lock; reads take the same lock just
long enough to snapshot a consistent view.
"""

from __future__ import annotations

import json
import re
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import (
    DEFAULT_SOLVER_CAP,
    GameState,
    Player,
    Transcript,
    best_move,
    replay,
    solve,
    terminal_status,
)
from .graphs import Graph, GraphError, ParseError, layout, parse_graph_expr
from .resolving import is_resolving
from .strategies import CATALOG, Strategy, StrategyError, catalog_for

DEFAULT_PLAYABLE_CAP = 20

_ENGINE_RE = re.compile(r"^strategy\((?P<name>[a-z0-9-]+)\)$")


class ApiError(Exception):
    """Carried to the client verbatim as {code, message}."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class CreateSessionBody(BaseModel):
    graph: str
    humanRole: str
    firstPlayer: str
    engine: str = "optimal"


class MoveBody(BaseModel):
    vertex: int


def _player(name: str, fieldname: str) -> Player:
    try:
        return Player(name)
    except ValueError:
        raise ApiError(400, "bad_request",
                       f"{fieldname} must be 'resolver' or 'spoiler'") from None


@dataclass
class _Session:
    id: str
    graph: Graph
    expr: str
    human_role: Player
    first: Player
    engine_spec: str
    strategy: Optional[Strategy]
    transcript: Transcript
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def engine_role(self) -> Player:
        return self.human_role.opponent

    def position(self) -> tuple[GameState, Optional[Player]]:
        return replay(self.graph, self.transcript)


class SessionStore:
    """Thread-safe session registry with optional one-file-per-session mirror."""

    def __init__(self, persist_dir: Optional[str] = None):
        self._sessions: dict[str, _Session] = {}
        self._lock = threading.Lock()
        self._dir = Path(persist_dir) if persist_dir else None
        if self._dir is not None:
            self._dir.mkdir(parents=True, exist_ok=True)
            for path in sorted(self._dir.glob("*.json")):
                s = self._load(path)
                self._sessions[s.id] = s

    def add(self, session: _Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
        self.save(session)

    def get(self, session_id: str) -> _Session:
        with self._lock:
            s = self._sessions.get(session_id)
        if s is None:
            raise ApiError(404, "unknown_session", f"no session {session_id!r}")
        return s

    def save(self, s: _Session) -> None:
        if self._dir is None:
            return
        doc = {
            "id": s.id,
            "graph": s.expr,
            "humanRole": s.human_role.value,
            "firstPlayer": s.first.value,
            "engine": s.engine_spec,
            "moves": [[p.value, v] for p, v in s.transcript.moves],
        }
        path = self._dir / f"{s.id}.json"
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, indent=2))
        tmp.replace(path)

    def _load(self, path: Path) -> _Session:
        doc = json.loads(path.read_text())
        g = parse_graph_expr(doc["graph"])
        s = _Session(
            id=doc["id"],
            graph=g,
            expr=doc["graph"],
            human_role=Player(doc["humanRole"]),
            first=Player(doc["firstPlayer"]),
            engine_spec=doc["engine"],
            strategy=_build_strategy(g, doc["engine"], Player(doc["humanRole"])),
            transcript=Transcript(Player(doc["firstPlayer"]),
                                  [(Player(p), v) for p, v in doc["moves"]]),
        )
        replay(g, s.transcript)  # re-validate the persisted line
        return s


def _build_strategy(g: Graph, engine_spec: str, human_role: Player
                    ) -> Optional[Strategy]:
    if engine_spec == "optimal":
        return None
    m = _ENGINE_RE.match(engine_spec)
    if m is None:
        raise ApiError(400, "bad_request",
                       "engine must be 'optimal' or 'strategy(name)'")
    name = m.group("name")
    for entry in CATALOG:
        if entry.name == name:
            if not entry.applies(g):
                raise ApiError(400, "bad_request",
                               f"strategy {name!r} does not apply to this graph")
            if entry.role is human_role:
                raise ApiError(400, "bad_request",
                               f"strategy {name!r} plays the human's role")
            return entry.build(g)
    raise ApiError(400, "bad_request", f"unknown strategy {name!r}")


def _meters(g: Graph, state: GameState) -> dict:
    """The two live win-condition meters.

    unresolvedPairs counts vertex pairs not yet separated by the Resolver's
    claimed set; spoilerAlive says whether the complement of the Spoiler's
    set is still resolving (i.e. the Resolver's goal is still reachable).
    """
    unresolved = 0
    res = sorted(state.resolver)
    dist = g.distances()
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if not any(dist[x][v] != dist[y][v] for v in res):
                unresolved += 1
    alive = is_resolving(g, set(range(g.n)) - set(state.spoiler))
    return {"unresolvedPairs": unresolved, "spoilerAlive": alive}


def _engine_move(s: _Session, state: GameState) -> int:
    history = tuple(s.transcript.moves)
    if s.strategy is not None:
        try:
            return s.strategy.pick(s.graph, state, history)
        except StrategyError:
            pass  # position outside the plan; fall back to search below
    if s.graph.n <= DEFAULT_SOLVER_CAP:
        v, _ = best_move(s.graph, state)
        return v
    return _greedy_move(s.graph, state)


def _greedy_move(g: Graph, state: GameState) -> int:
    """Above the solver cap: Resolver grabs the vertex separating the most
    still-unresolved pairs; Spoiler hits the most-threatened pair."""
    from .resolving import pair_separators

    masks = pair_separators(g)
    rm = sum(1 << v for v in state.resolver)
    sm = sum(1 << v for v in state.spoiler)
    alive = [m for m in masks if not m & rm]
    free = [v for v in range(g.n) if not (rm | sm) >> v & 1]
    mover = state.to_move
    if mover is Player.RESOLVER:
        return max(free, key=lambda v: (sum(1 for m in alive if m >> v & 1), -v))
    best = min(alive, key=lambda m: bin(m & ~sm).count("1"), default=None)
    if best is not None:
        for v in free:
            if best >> v & 1:
                return v
    return free[0]


def _hint(s: _Session, state: GameState) -> tuple[int, str]:
    role = state.to_move
    history = tuple(s.transcript.moves)
    suggestion: Optional[tuple[int, str]] = None
    for entry in catalog_for(s.graph):
        if entry.role is not role:
            continue
        try:
            suggestion = entry.build(s.graph).pick_explained(
                s.graph, state, history)
            break
        except (StrategyError, GraphError):
            continue
    if s.graph.n > DEFAULT_SOLVER_CAP:
        if suggestion is None:
            raise ApiError(400, "cap_exceeded",
                           "graph exceeds the solver cap and no catalog "
                           "strategy applies for this role")
        return suggestion
    # within the solver cap, never let a plan hint throw away a won position
    if suggestion is not None:
        if solve(s.graph, s.first, state).winner is not role:
            return suggestion
        after = state.apply(role, suggestion[0])
        if (terminal_status(s.graph, after) is role
                or solve(s.graph, s.first, after).winner is role):
            return suggestion
    v, _ = best_move(s.graph, state)
    return v, "optimal (solver)"


def create_app(
    playable_cap: int = DEFAULT_PLAYABLE_CAP,
    persist_dir: Optional[str] = None,
    cors_origin: str = "*",
    ui_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="mbrg", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(persist_dir)

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"code": exc.code, "message": exc.message})

    def view(s: _Session) -> dict:
        state, winner = s.position()
        finished = winner is not None
        return {
            "id": s.id,
            "graph": {
                "expr": s.expr,
                "n": s.graph.n,
                "edges": sorted(s.graph.edges),
                "corona": list(s.graph.corona_shape)
                if s.graph.corona_shape else None,
            },
            "layout": [list(p) for p in layout(s.graph)],
            "humanRole": s.human_role.value,
            "firstPlayer": s.first.value,
            "engine": s.engine_spec,
            "status": "finished" if finished else "ongoing",
            "winner": winner.value if finished else None,
            "toMove": None if finished else state.to_move.value,
            "resolver": sorted(state.resolver),
            "spoiler": sorted(state.spoiler),
            "transcript": [[p.value, v] for p, v in s.transcript.moves],
            "meters": _meters(s.graph, state),
        }

    def advance_engine(s: _Session) -> None:
        """Let the engine move whenever it is on turn and the game is live."""
        state, winner = s.position()
        while winner is None and state.to_move is s.engine_role:
            v = _engine_move(s, state)
            s.transcript.moves.append((s.engine_role, v))
            state, winner = s.position()

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        try:
            g = parse_graph_expr(body.graph)
        except (ParseError, GraphError) as e:
            raise ApiError(400, "parse_error", str(e)) from e
        if g.n > playable_cap:
            raise ApiError(400, "cap_exceeded",
                           f"order {g.n} exceeds playable cap {playable_cap}")
        if g.n < 2 or not g.is_connected():
            raise ApiError(400, "parse_error",
                           "playable graphs must be connected with >= 2 vertices")
        human = _player(body.humanRole, "humanRole")
        first = _player(body.firstPlayer, "firstPlayer")
        strategy = _build_strategy(g, body.engine, human)
        s = _Session(
            id=secrets.token_urlsafe(9),
            graph=g,
            expr=body.graph,
            human_role=human,
            first=first,
            engine_spec=body.engine,
            strategy=strategy,
            transcript=Transcript(first),
        )
        with s.lock:
            advance_engine(s)
            store.add(s)
            return view(s)

    @app.get("/sessions/{session_id}")
    def session_state(session_id: str):
        s = store.get(session_id)
        with s.lock:
            return view(s)

    @app.post("/sessions/{session_id}/moves")
    def play(session_id: str, body: MoveBody):
        s = store.get(session_id)
        with s.lock:
            state, winner = s.position()
            if winner is not None:
                raise ApiError(409, "game_over", "the game is finished")
            if state.to_move is not s.human_role:
                raise ApiError(409, "not_your_turn", "engine to move")
            if not 0 <= body.vertex < s.graph.n:
                raise ApiError(400, "bad_request",
                               f"vertex {body.vertex} out of range")
            if body.vertex in state.claimed():
                raise ApiError(409, "vertex_claimed",
                               f"vertex {body.vertex} already claimed")
            s.transcript.moves.append((s.human_role, body.vertex))
            advance_engine(s)
            store.save(s)
            return view(s)

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        s = store.get(session_id)
        with s.lock:
            moves = s.transcript.moves
            if not any(p is s.human_role for p, _ in moves):
                raise ApiError(409, "nothing_to_undo", "no human move to undo")
            while moves and moves[-1][0] is s.engine_role:
                moves.pop()
            moves.pop()  # the human move
            store.save(s)
            return view(s)

    @app.get("/sessions/{session_id}/hint")
    def hint(session_id: str):
        s = store.get(session_id)
        with s.lock:
            state, winner = s.position()
            if winner is not None:
                raise ApiError(409, "game_over", "the game is finished")
            if state.to_move is not s.human_role:
                raise ApiError(409, "not_your_turn", "engine to move")
            v, tag = _hint(s, state)
            return {"vertex": v, "tag": tag}

    @app.get("/strategies")
    def strategies(graph: str):
        try:
            g = parse_graph_expr(graph)
        except (ParseError, GraphError) as e:
            raise ApiError(400, "parse_error", str(e)) from e
        return [{"name": e.name, "role": e.role.value} for e in catalog_for(g)]

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
