"""Graph construction, corona products, distances, and the expression DSL.

Graphs are immutable simple undirected graphs over vertex ids 0..n-1.  A
corona product G (*) H lays the n(G) base vertices first (ids 0..n(G)-1) and
then one contiguous block per copy of H, so sessions and transcripts are
reproducible byte-for-byte.  Distances are plain BFS hop counts with -1 as
the sentinel for unreachable pairs.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

#: Default capacity cap so a vertex set always fits one machine word.
DEFAULT_CAP = 64

UNREACHABLE = -1

FAMILIES = ("path", "cycle", "complete", "star", "paw", "petersen", "k1")


class GraphError(ValueError):
    """Invalid graph construction parameters."""


class ParseError(ValueError):
    """Graph-expression syntax or semantic error, with position info."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


@dataclass(frozen=True)
class CoronaLabel:
    """Provenance of a vertex inside a corona product.

    kind is "base" (i = index of the base vertex) or "copy"
    (i = copy index, j = index inside the copy).
    """

    kind: str
    i: int
    j: int = -1


class Graph:
    """Immutable simple undirected graph with canonical vertex ids 0..n-1."""

    __slots__ = ("n", "edges", "labels", "expr", "corona_shape", "_adj", "_dist", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[tuple[CoronaLabel, ...]] = None,
        expr: Optional[str] = None,
        corona_shape: Optional[tuple[int, int]] = None,
        cap: int = DEFAULT_CAP,
    ):
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if n > cap:
            raise GraphError(f"order {n} exceeds capacity cap {cap}")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "expr", expr)
        object.__setattr__(self, "corona_shape", corona_shape)
        adj = [0] * n
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_dist", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighbourhood of v."""
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return frozenset(u for u in range(self.n) if self._adj[v] >> u & 1)

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    # -- distances and metrics ---------------------------------------------

    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs BFS hop distances; UNREACHABLE (-1) marks no path."""
        if self._dist is None:
            rows = []
            for s in range(self.n):
                row = [UNREACHABLE] * self.n
                row[s] = 0
                q = deque([s])
                while q:
                    u = q.popleft()
                    du = row[u]
                    for w in range(self.n):
                        if self._adj[u] >> w & 1 and row[w] == UNREACHABLE:
                            row[w] = du + 1
                            q.append(w)
                rows.append(tuple(row))
            object.__setattr__(self, "_dist", tuple(rows))
        return self._dist

    def is_connected(self) -> bool:
        return UNREACHABLE not in self.distances()[0]

    def diameter(self) -> int:
        """Largest distance over reachable pairs."""
        return max(max(d for d in row if d != UNREACHABLE) for row in self.distances())

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))

    def metrics(self) -> tuple[int, int, bool]:
        """(diameter over reachable pairs, max degree, connectivity flag)."""
        return self.diameter(), self.max_degree(), self.is_connected()

    # -- corona helpers ----------------------------------------------------

    @property
    def is_corona(self) -> bool:
        return self.corona_shape is not None

    def base_count(self) -> int:
        if self.corona_shape is None:
            raise GraphError("not a corona product")
        return self.corona_shape[0]

    def copy_order(self) -> int:
        if self.corona_shape is None:
            raise GraphError("not a corona product")
        return self.corona_shape[1]

    def copy_vertices(self, i: int) -> range:
        """Vertex ids of the i-th copy block."""
        ng, nh = self.corona_shape
        if not 0 <= i < ng:
            raise GraphError(f"copy index {i} out of range")
        start = ng + i * nh
        return range(start, start + nh)

    def copy_of(self, v: int) -> Optional[int]:
        """Copy index of a copy vertex, or None for base vertices."""
        ng, nh = self.corona_shape
        if v < ng:
            return None
        return (v - ng) // nh

    def local_index(self, v: int) -> int:
        """Index of a copy vertex inside its copy."""
        ng, nh = self.corona_shape
        if v < ng:
            raise GraphError(f"vertex {v} is a base vertex")
        return (v - ng) % nh

    # -- misc ----------------------------------------------------------------

    def pretty(self) -> str:
        """DSL expression when known, else the plain-text edge-list format."""
        if self.expr is not None:
            return self.expr
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.edges))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        tag = self.expr or f"n={self.n},m={self.m}"
        return f"Graph({tag})"


# -- generators ---------------------------------------------------------------


def generate(family: str, *params: int, cap: int = DEFAULT_CAP) -> Graph:
    """Build a named graph family with canonical vertex numbering.

    Paths and cycles are numbered consecutively 0..k-1 along the walk.
    """
    family = family.lower()
    if family == "path":
        _need(params, 1, family)
        k = params[0]
        if k < 1:
            raise GraphError("path needs k >= 1")
        return Graph(k, [(i, i + 1) for i in range(k - 1)], expr=f"path({k})", cap=cap)
    if family == "cycle":
        _need(params, 1, family)
        k = params[0]
        if k < 3:
            raise GraphError("cycle needs k >= 3")
        edges = [(i, i + 1) for i in range(k - 1)] + [(k - 1, 0)]
        return Graph(k, edges, expr=f"cycle({k})", cap=cap)
    if family == "complete":
        _need(params, 1, family)
        n = params[0]
        if n < 1:
            raise GraphError("complete needs n >= 1")
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return Graph(n, edges, expr=f"complete({n})", cap=cap)
    if family == "star":
        _need(params, 1, family)
        k = params[0]
        if k < 1:
            raise GraphError("star needs k >= 1 leaves")
        return Graph(k + 1, [(0, i) for i in range(1, k + 1)], expr=f"star({k})", cap=cap)
    if family == "paw":
        _need(params, 0, family)
        # triangle 0-1-2 with the pendant vertex 3 attached to 0
        return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)], expr="paw", cap=cap)
    if family == "petersen":
        _need(params, 0, family)
        edges = []
        for i in range(5):
            edges.append((i, (i + 1) % 5))  # outer 5-cycle
            edges.append((i, i + 5))  # spokes
            edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        return Graph(10, edges, expr="petersen", cap=cap)
    if family == "k1":
        _need(params, 0, family)
        return Graph(1, [], expr="k1", cap=cap)
    raise GraphError(f"unknown family {family!r}")


def _need(params: tuple[int, ...], k: int, family: str) -> None:
    if len(params) != k:
        raise GraphError(f"{family} takes {k} parameter(s), got {len(params)}")


def corona(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> Graph:
    """Corona product: one copy of g plus n(g) copies of h, the i-th base
    vertex joined to every vertex of the i-th copy.

    Vertex layout: base vertices 0..n(g)-1 first, then copy i occupies the
    contiguous block n(g)+i*n(h) .. n(g)+(i+1)*n(h)-1.
    """
    if not g.is_connected():
        raise GraphError("first corona factor must be connected")
    ng, nh = g.n, h.n
    n = ng * (1 + nh)
    edges = list(g.edges)
    labels: list[CoronaLabel] = [CoronaLabel("base", i) for i in range(ng)]
    for i in range(ng):
        start = ng + i * nh
        for u, v in h.edges:
            edges.append((start + u, start + v))
        for j in range(nh):
            edges.append((i, start + j))
            labels.append(CoronaLabel("copy", i, j))
    expr = None
    if g.expr is not None and h.expr is not None:
        expr = f"corona({g.expr},{h.expr})"
    return Graph(
        n, edges, labels=tuple(labels), expr=expr, corona_shape=(ng, nh), cap=cap
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, reindexed 0..k-1 in sorted order."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(vs), edges)


# -- expression DSL ------------------------------------------------------------

_TOKEN = re.compile(r"\s*([a-zA-Z_][a-zA-Z_0-9]*|\d+|[(),])")


def parse_graph_expr(text: str, cap: int = DEFAULT_CAP) -> Graph:
    """Parse the graph DSL: expr := family "(" ints ")" | "corona(" expr "," expr ")".

    Zero-parameter families (paw, petersen, k1) may omit the parentheses.
    Whitespace-insensitive.  Raises ParseError with a position on bad input.
    """
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()

    idx = 0

    def peek() -> Optional[tuple[str, int]]:
        return tokens[idx] if idx < len(tokens) else None

    def take(expected: Optional[str] = None) -> tuple[str, int]:
        nonlocal idx
        if idx >= len(tokens):
            raise ParseError(
                f"unexpected end of input, expected {expected or 'more input'}",
                len(text),
            )
        tok = tokens[idx]
        if expected is not None and tok[0] != expected:
            raise ParseError(f"expected {expected!r}, got {tok[0]!r}", tok[1])
        idx += 1
        return tok

    def expr() -> Graph:
        name, at = take()
        name_l = name.lower()
        if name_l == "corona":
            take("(")
            g = expr()
            take(",")
            h = expr()
            take(")")
            try:
                return corona(g, h, cap=cap)
            except GraphError as e:
                raise ParseError(str(e), at) from e
        if name_l not in FAMILIES:
            raise ParseError(f"unknown family {name!r}", at)
        args: list[int] = []
        nxt = peek()
        if nxt is not None and nxt[0] == "(":
            take("(")
            nxt = peek()
            if nxt is not None and nxt[0] != ")":
                while True:
                    tok, tat = take()
                    if not tok.isdigit():
                        raise ParseError(f"expected integer, got {tok!r}", tat)
                    args.append(int(tok))
                    nxt = peek()
                    if nxt is not None and nxt[0] == ",":
                        take(",")
                        continue
                    break
            take(")")
        try:
            return generate(name_l, *args, cap=cap)
        except GraphError as e:
            raise ParseError(str(e), at) from e

    g = expr()
    rest = peek()
    if rest is not None:
        raise ParseError(f"trailing input {rest[0]!r}", rest[1])
    return g


def parse_plain(text: str, cap: int = DEFAULT_CAP) -> Graph:
    """Plain-text graph format: first line "n m", then m lines "u v" (0-based)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError('first line must be "n m"')
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges, cap=cap)


# -- layout for rendering -------------------------------------------------------

import math


def layout(g: Graph) -> list[tuple[float, float]]:
    """Per-vertex (x, y) coordinates in [0,1]^2 for rendering.

    Paths go on a line, cycles and generic graphs on a circle; corona
    products place the base graph centrally and each copy in a radial
    cluster around its base vertex.
    """
    if g.corona_shape is not None:
        ng, nh = g.corona_shape
        base = _scale(_shape_coords(g.expr_base_hint(), ng), 0.5, 0.5, 0.28)
        coords = list(base)
        for i in range(ng):
            bx, by = base[i]
            # copies sit on a small ring around their base vertex
            for j in range(nh):
                ang = 2 * math.pi * j / nh
                r = 0.16 if ng > 1 else 0.3
                coords.append((bx + r * math.cos(ang), by + r * math.sin(ang)))
        return _clamp(coords)
    if g.expr and g.expr.startswith("path("):
        if g.n == 1:
            return [(0.5, 0.5)]
        return [(0.08 + 0.84 * i / (g.n - 1), 0.5) for i in range(g.n)]
    return _clamp(_scale(_circle(g.n), 0.5, 0.5, 0.42))


def _circle(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * i / n - math.pi / 2), math.sin(2 * math.pi * i / n - math.pi / 2))
        for i in range(n)
    ]


def _shape_coords(kind: str, n: int) -> list[tuple[float, float]]:
    if kind == "path":
        if n == 1:
            return [(0.0, 0.0)]
        return [(-1.0 + 2.0 * i / (n - 1), 0.0) for i in range(n)]
    return _circle(n)


def _scale(coords, cx, cy, r):
    return [(cx + r * x, cy + r * y) for x, y in coords]


def _clamp(coords):
    return [(min(0.98, max(0.02, x)), min(0.98, max(0.02, y))) for x, y in coords]


def _expr_base_hint(self: Graph) -> str:
    """Rough shape of the first corona factor, for layout only."""
    if self.expr and self.expr.startswith("corona(path("):
        return "path"
    return "circle"


Graph.expr_base_hint = _expr_base_hint
