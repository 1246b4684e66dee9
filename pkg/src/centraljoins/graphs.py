"""Simple undirected graphs, standard families, and central constructions.

A :class:`Graph` is a vertex count ``n`` plus a canonically sorted tuple of
edges ``(u, v)`` with ``u < v``.  Everything here is immutable and pure, so
values can be shared freely.

Three composite constructions are provided:

* ``central_graph(G)``: subdivide every edge of ``G`` once, then join every
  pair of vertices that were non-adjacent in ``G``.
* ``central_vertex_join(G1, G2)``: the central graph of ``G1`` together with
  ``G2``, plus all edges between original ``G1`` vertices and ``G2``.
* ``central_edge_join(G1, G2)``: as above, but the subdivision vertices
  (one per edge of ``G1``) are the ones joined to every vertex of ``G2``.

Composite vertices are always ordered: original vertices of ``G1`` first,
then subdivision vertices in sorted edge order, then ``G2`` vertices.  The
returned :class:`VertexLabeling` records the origin of every vertex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import (
    DuplicateEdgeError,
    InvalidParameterError,
    NotRegularError,
    SelfLoopError,
    UnknownFamilyError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1`` and sorted edges."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRangeError(f"negative vertex count {self.n}")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            if prev is not None and (u, v) <= prev:
                raise DuplicateEdgeError(f"edge ({u}, {v}) duplicated or out of order")
            prev = (u, v)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        """Dense adjacency matrix as float64."""
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical :class:`Graph`, normalizing each pair to ``u < v``.

    Raises ``SelfLoopError``, ``DuplicateEdgeError`` or
    ``VertexOutOfRangeError`` for invalid input.
    """
    seen: set[Edge] = set()
    for a, b in edges:
        if a == b:
            raise SelfLoopError(f"self-loop at vertex {a}")
        u, v = (a, b) if a < b else (b, a)
        if u < 0 or v >= n:
            raise VertexOutOfRangeError(f"edge ({a}, {b}) outside 0..{n - 1}")
        if (u, v) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({a}, {b})")
        seen.add((u, v))
    return Graph(n, tuple(sorted(seen)))


@dataclass(frozen=True)
class RegularGraph:
    """A graph validated to have every degree equal to ``r``.

    All closed-form spectral paths take this wrapper rather than a bare
    :class:`Graph`, so irregular inputs are rejected before any formula runs.
    """

    graph: Graph
    r: int

    def __post_init__(self):
        deg = self.graph.degrees()
        if deg.size and not np.all(deg == self.r):
            raise NotRegularError(
                f"graph is not {self.r}-regular", sorted(deg.tolist())
            )
        if self.graph.n * self.r != 2 * self.graph.m:
            raise NotRegularError(
                f"n*r = {self.graph.n * self.r} != 2m = {2 * self.graph.m}",
                sorted(deg.tolist()),
            )

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


def as_regular(g: Graph) -> RegularGraph:
    """Wrap ``g`` as a :class:`RegularGraph` or raise ``NotRegularError``."""
    deg = g.degrees()
    if g.n == 0:
        return RegularGraph(g, 0)
    values = set(deg.tolist())
    if len(values) != 1:
        raise NotRegularError("graph is not regular", sorted(deg.tolist()))
    return RegularGraph(g, int(deg[0]))


class Role(NamedTuple):
    """Origin tag for one vertex of a composite graph.

    ``kind`` is ``"original"`` (vertex of G1, source = its index),
    ``"subdivision"`` (midpoint of an edge of G1, source = that edge), or
    ``"partner"`` (vertex of G2, source = its index in G2).
    """

    kind: str
    source: int | Edge


@dataclass(frozen=True)
class VertexLabeling:
    roles: tuple[Role, ...]

    def counts(self) -> tuple[int, int, int]:
        """(#original, #subdivision, #partner) in labeling order."""
        kinds = [r.kind for r in self.roles]
        return (
            kinds.count("original"),
            kinds.count("subdivision"),
            kinds.count("partner"),
        )


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges."""
    present = g.edge_set()
    edges = tuple(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in present
    )
    return Graph(g.n, edges)


def _central_part(g: Graph) -> tuple[list[Edge], list[Role]]:
    # Shared skeleton of all three constructions: complement edges among the
    # originals plus one subdivision vertex per edge, in sorted edge order.
    n = g.n
    edges: list[Edge] = list(complement(g).edges)
    roles: list[Role] = [Role("original", u) for u in range(n)]
    for k, (u, v) in enumerate(g.edges):
        s = n + k
        edges.append((u, s))
        edges.append((v, s))
        roles.append(Role("subdivision", (u, v)))
    return edges, roles


def central_graph(g: Graph) -> tuple[Graph, VertexLabeling]:
    """Subdivide every edge once and join all originally non-adjacent pairs.

    The result has ``n + m`` vertices and ``m + n(n-1)/2`` edges.  Vertices
    ``0..n-1`` are the originals; vertex ``n + k`` is the midpoint of the
    k-th edge in sorted order.
    """
    edges, roles = _central_part(g)
    return make_graph(g.n + g.m, edges), VertexLabeling(tuple(roles))


def central_vertex_join(g1: Graph, g2: Graph) -> tuple[Graph, VertexLabeling]:
    """Central graph of ``g1`` plus ``g2``, joining originals to all of ``g2``.

    ``m1 + n1 + n2`` vertices and ``m1 + m2 + n1*n2 + n1(n1-1)/2`` edges.
    """
    edges, roles = _central_part(g1)
    off = g1.n + g1.m
    for u, v in g2.edges:
        edges.append((off + u, off + v))
    for u in range(g1.n):
        for w in range(g2.n):
            edges.append((u, off + w))
    roles.extend(Role("partner", w) for w in range(g2.n))
    return make_graph(off + g2.n, edges), VertexLabeling(tuple(roles))


def central_edge_join(g1: Graph, g2: Graph) -> tuple[Graph, VertexLabeling]:
    """Central graph of ``g1`` plus ``g2``, joining subdivision vertices to ``g2``.

    ``m1 + n1 + n2`` vertices and ``m1 + m2 + m1*n2 + n1(n1-1)/2`` edges.
    """
    edges, roles = _central_part(g1)
    off = g1.n + g1.m
    for u, v in g2.edges:
        edges.append((off + u, off + v))
    for k in range(g1.m):
        for w in range(g2.n):
            edges.append((g1.n + k, off + w))
    roles.extend(Role("partner", w) for w in range(g2.n))
    return make_graph(off + g2.n, edges), VertexLabeling(tuple(roles))


# ---------------------------------------------------------------------------
# standard families


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise InvalidParameterError("complete(n) needs n >= 1")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(p: int, q: int) -> Graph:
    """Complete bipartite graph K_{p,q}; parts are 0..p-1 and p..p+q-1."""
    if p < 1 or q < 1:
        raise InvalidParameterError("complete_bipartite(p, q) needs p, q >= 1")
    return Graph(p + q, tuple((u, p + v) for u in range(p) for v in range(q)))


def cycle(n: int) -> Graph:
    """Cycle C_n."""
    if n < 3:
        raise InvalidParameterError("cycle(n) needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path P_n on n vertices."""
    if n < 1:
        raise InvalidParameterError("path(n) needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle, inner pentagram, five spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return make_graph(10, edges)


def shrikhande() -> Graph:
    """Shrikhande graph as the Cayley graph of Z4 x Z4.

    Vertex ``4a + b`` stands for ``(a, b)``; two vertices are adjacent when
    their difference lies in ``{±(1,0), ±(0,1), ±(1,1)}`` mod 4.  6-regular
    on 16 vertices with 48 edges.
    """
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for x in range(16):
        for y in range(x + 1, 16):
            diff = ((x // 4 - y // 4) % 4, (x % 4 - y % 4) % 4)
            if diff in conn:
                edges.append((x, y))
    return make_graph(16, edges)


def rook_4x4() -> Graph:
    """4x4 rook's graph: cells of a 4x4 board, adjacent in same row or column.

    6-regular on 16 vertices; shares its adjacency spectrum with the
    Shrikhande graph while not being isomorphic to it.
    """
    edges = [
        (x, y)
        for x in range(16)
        for y in range(x + 1, 16)
        if x // 4 == y // 4 or x % 4 == y % 4
    ]
    return make_graph(16, edges)


_FAMILY_BUILDERS = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "petersen": (petersen, 0),
    "shrikhande": (shrikhande, 0),
    "rook_4x4": (rook_4x4, 0),
}

_FAMILY_RE = re.compile(r"^\s*([a-z0-9_]+)\s*(?:\(\s*([-0-9,\s]*)\s*\))?\s*$")


def family(name: str) -> Graph:
    """Build a named graph from a spec string such as ``"complete_bipartite(3,3)"``.

    Recognised families: complete(n), complete_bipartite(p,q), cycle(n),
    path(n), petersen, shrikhande, rook_4x4.
    """
    match = _FAMILY_RE.match(name.lower())
    if not match:
        raise UnknownFamilyError(f"cannot parse family spec {name!r}")
    base, argtext = match.groups()
    if base not in _FAMILY_BUILDERS:
        raise UnknownFamilyError(f"unknown family {base!r}")
    builder, arity = _FAMILY_BUILDERS[base]
    args: tuple[int, ...] = ()
    if argtext:
        try:
            args = tuple(int(tok) for tok in argtext.split(","))
        except ValueError as exc:
            raise InvalidParameterError(f"non-integer parameter in {name!r}") from exc
    if len(args) != arity:
        raise InvalidParameterError(
            f"family {base!r} takes {arity} parameter(s), got {len(args)}"
        )
    return builder(*args)


# ---------------------------------------------------------------------------
# cheap structural oracles (independent of any spectral machinery)


def component_count(g: Graph) -> int:
    """Number of connected components, via union-find."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(x) for x in range(g.n)})


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or component_count(g) == 1


def has_bipartite_component(g: Graph) -> bool:
    """True when some component containing an edge admits a 2-coloring."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1 or not adj[start]:
            continue
        color[start] = 0
        queue = [start]
        ok = True
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    ok = False
        if ok:
            return True
    return False
