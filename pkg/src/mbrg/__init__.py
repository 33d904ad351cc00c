"""Maker-Breaker resolving game laboratory.

Exact game solving, structural resolving/locating predicates, constructive
proof strategies with exhaustive validation, a theorem-verification harness,
and an interactive play service, all over graphs and corona products.
"""

from .graphs import (
    Graph,
    CoronaLabel,
    GraphError,
    ParseError,
    generate,
    corona,
    parse_graph_expr,
    parse_plain,
)
from .resolving import (
    VertexSet,
    PairingSystem,
    is_resolving,
    is_locating,
    is_strictly_locating,
    is_pairing_resolving,
    find_pairing_resolving,
    metric_dimension,
)
from .engine import (
    KERNEL_BACKEND,
    Player,
    OutcomeClass,
    GameState,
    GameValue,
    GameNumbers,
    Transcript,
    terminal_status,
    solve,
    outcome,
    game_numbers,
    best_move,
    replay,
    winner_only,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "CoronaLabel",
    "GraphError",
    "ParseError",
    "generate",
    "corona",
    "parse_graph_expr",
    "parse_plain",
    "VertexSet",
    "PairingSystem",
    "is_resolving",
    "is_locating",
    "is_strictly_locating",
    "is_pairing_resolving",
    "find_pairing_resolving",
    "metric_dimension",
    "KERNEL_BACKEND",
    "Player",
    "OutcomeClass",
    "GameState",
    "GameValue",
    "GameNumbers",
    "Transcript",
    "terminal_status",
    "solve",
    "outcome",
    "game_numbers",
    "best_move",
    "replay",
    "winner_only",
]
