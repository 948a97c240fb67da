"""Dart-based finite multigraphs.

A graph is a set of vertices 0..n-1 and a list of edges, each an ordered
pair (from, to).  Loops and parallel edges are allowed.  Edge k owns the
two darts 2k and 2k+1: dart 2k originates at the "from" vertex, dart
2k+1 at the "to" vertex, and reversal is d ^ 1.  All identifiers are
dense integers and every iteration order is by identifier, so derived
data (spanning trees, bases, matrices) is reproducible across runs.

Wire format: ``{"vertices":[0,...,n-1],"edges":[[from,to],...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

__all__ = [
    "Graph",
    "Subgraph",
    "GraphFormatError",
    "parse_graph",
    "serialize_graph",
    "is_connected",
    "euler_characteristic",
    "genus",
    "valence",
    "free_edges",
    "subdivide_all",
]


class GraphFormatError(ValueError):
    """Raised when a graph document does not conform to the wire format."""


@dataclass(frozen=True)
class Graph:
    """Immutable multigraph; safe to share and to use as a dict key."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("vertex set must be non-empty")
        for k, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge {k} = ({u}, {v}) references an unknown vertex")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_darts(self) -> int:
        return 2 * len(self.edges)

    def origin(self, d: int) -> int:
        """Vertex the dart points away from."""
        e, side = divmod(d, 2)
        return self.edges[e][side]

    @staticmethod
    def reverse(d: int) -> int:
        return d ^ 1

    @staticmethod
    def edge_of(d: int) -> int:
        return d >> 1

    @cached_property
    def _darts_at(self) -> tuple[tuple[int, ...], ...]:
        table: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for d in range(self.n_darts):
            table[self.origin(d)].append(d)
        return tuple(tuple(ds) for ds in table)

    def darts_at(self, v: int) -> tuple[int, ...]:
        """Darts originating at v, in ascending identifier order."""
        if not 0 <= v < self.n_vertices:
            raise ValueError(f"unknown vertex {v}")
        return self._darts_at[v]

    @cached_property
    def loop_edges(self) -> tuple[int, ...]:
        return tuple(k for k, (u, v) in enumerate(self.edges) if u == v)

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        """Edges joining u and v (unordered); for u == v, the loops at u."""
        a, b = (u, v) if u <= v else (v, u)
        return tuple(
            k for k, (x, y) in enumerate(self.edges) if (min(x, y), max(x, y)) == (a, b)
        )


@dataclass(frozen=True)
class Subgraph:
    """A vertex/edge subset of a parent graph, closed under incidence."""

    parent: Graph
    vertices: frozenset[int]
    edges: frozenset[int]

    def __post_init__(self):
        for e in self.edges:
            u, v = self.parent.edges[e]
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge {e} has an endpoint outside the vertex subset")

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges)

    def is_whole_graph(self) -> bool:
        return len(self.vertices) == self.parent.n_vertices and len(self.edges) == self.parent.n_edges


def parse_graph(text: str) -> Graph:
    """Parse the JSON wire format, reporting the location of any defect."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError("top-level value must be an object")
    for key in ("vertices", "edges"):
        if key not in doc:
            raise GraphFormatError(f"missing key {key!r}")
    extra = set(doc) - {"vertices", "edges"}
    if extra:
        raise GraphFormatError(f"unexpected keys: {sorted(extra)}")
    vertices = doc["vertices"]
    edges = doc["edges"]
    if not isinstance(vertices, list) or not vertices:
        raise GraphFormatError("'vertices' must be a non-empty array")
    for i, v in enumerate(vertices):
        if type(v) is not int:
            raise GraphFormatError(f"vertex at position {i} is not an integer")
        if v != i:
            raise GraphFormatError(
                f"vertex at position {i} is {v}; vertices must be exactly 0..n-1 in order"
            )
    n = len(vertices)
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be an array")
    pairs = []
    for k, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2 or any(type(x) is not int for x in e):
            raise GraphFormatError(f"edge {k} must be a pair of integers")
        u, v = e
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"edge {k}: vertex {x} not declared")
        pairs.append((u, v))
    return Graph(n, tuple(pairs))


def serialize_graph(g: Graph) -> str:
    """Emit the canonical wire form, byte-stable for a fixed graph."""
    doc = {"vertices": list(range(g.n_vertices)), "edges": [list(e) for e in g.edges]}
    return json.dumps(doc, separators=(",", ":"))


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    seen = [False] * g.n_vertices
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for d in g.darts_at(u):
            w = g.origin(Graph.reverse(d))
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n_vertices


def euler_characteristic(g: Graph) -> int:
    return g.n_vertices - g.n_edges


def genus(g: Graph) -> int:
    """Cycle rank E - V + 1; the rank of first homology.  Connected only."""
    if not is_connected(g):
        raise ValueError("genus is defined here for connected graphs only")
    return 1 - euler_characteristic(g)


def valence(g: Graph, v: int) -> int:
    """Number of darts originating at v; a loop contributes 2."""
    return len(g.darts_at(v))


def free_edges(g: Graph) -> list[int]:
    """Edges with at least one endpoint of valence 1 (pendant edges)."""
    val = [len(g.darts_at(v)) for v in range(g.n_vertices)]
    return [k for k, (u, v) in enumerate(g.edges) if val[u] == 1 or val[v] == 1]


DartCorrespondence = tuple[tuple[int, int], ...]


@lru_cache(maxsize=1024)
def subdivide_all(g: Graph) -> tuple[Graph, DartCorrespondence]:
    """Barycentric subdivision: edge k gains midpoint vertex n + k.

    Edge k = (u, v) is replaced by edge 2k = (u, n+k) and edge
    2k+1 = (n+k, v).  The correspondence maps each original dart to the
    ordered pair of new darts traversed in its direction, so induced
    automorphisms of the subdivision can be written down without search.
    Genus and connectivity are preserved.
    """
    n = g.n_vertices
    new_edges = []
    for k, (u, v) in enumerate(g.edges):
        new_edges.append((u, n + k))
        new_edges.append((n + k, v))
    corr = []
    for d in range(g.n_darts):
        k = d >> 1
        if d % 2 == 0:
            corr.append((4 * k, 4 * k + 2))
        else:
            corr.append((4 * k + 3, 4 * k + 1))
    return Graph(n + g.n_edges, tuple(new_edges)), tuple(corr)
