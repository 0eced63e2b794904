"""Core graph types and construction primitives.

Vertices are dense integer ids 0..n-1.  All values are immutable after
construction, and every operation that grows a graph returns vertex maps so
callers can trace original vertices through later expansion stages.
Multi-edges are rejected at construction time, never merged silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no multiple edges.

    Edges are stored canonically as (u, v) with u < v; per-vertex sorted
    neighbor lists are derived lazily.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e!r} is not a canonical pair inside 0..{self.n - 1}")

    @classmethod
    def make(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Build a graph from an edge list, normalizing pair order.

        Duplicate edges (in either orientation) are an error.
        """
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e!r}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edge_list:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Digraph:
    """Directed graph: irreflexive arc set, antiparallel pairs allowed."""

    n: int
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for a in self.arcs:
            u, v = a
            if u == v:
                raise GraphError(f"loop arc at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc {a!r} outside 0..{self.n - 1}")

    @classmethod
    def make(cls, n: int, arcs: Iterable[tuple[int, int]] = ()) -> "Digraph":
        seen = set()
        for u, v in arcs:
            if (u, v) in seen:
                raise GraphError(f"duplicate arc {(u, v)!r}")
            seen.add((u, v))
        return cls(n, frozenset(seen))

    @cached_property
    def arc_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))

    @property
    def m(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class ColoredDigraph:
    """Directed graph with arcs carrying a color id in 0..k-1.

    At most one color per ordered pair: (u, v, 0) and (u, v, 1) may not
    coexist.  k may exceed the number of colors actually used.
    """

    n: int
    arcs: frozenset[tuple[int, int, int]] = frozenset()
    k: int = 0

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise GraphError("vertex and color counts must be nonnegative")
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        pairs = set()
        for a in self.arcs:
            u, v, c = a
            if u == v:
                raise GraphError(f"loop arc at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc {a!r} outside 0..{self.n - 1}")
            if not (0 <= c < self.k):
                raise GraphError(f"arc {a!r} has color outside 0..{self.k - 1}")
            if (u, v) in pairs:
                raise GraphError(f"duplicate colored arc on pair {(u, v)!r}")
            pairs.add((u, v))

    @classmethod
    def make(cls, n: int, arcs: Iterable[tuple[int, int, int]] = (), k: int = 0) -> "ColoredDigraph":
        return cls(n, frozenset(arcs), k)

    @cached_property
    def arc_list(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted(self.arcs))

    @property
    def m(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class PointedGraph:
    """Graph with a distinguished vertex; isomorphisms must preserve it."""

    graph: Graph
    point: int

    def __post_init__(self):
        if not (0 <= self.point < self.graph.n):
            raise GraphError(f"point {self.point} outside 0..{self.graph.n - 1}")

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class VertexMap:
    """Total map from the vertices of a source graph into a target graph."""

    images: tuple[int, ...]
    target_n: int

    def __post_init__(self):
        for v in self.images:
            if not (0 <= v < self.target_n):
                raise GraphError(f"image {v} outside target 0..{self.target_n - 1}")

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __len__(self) -> int:
        return len(self.images)

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and len(self.images) == self.target_n


def identity_map(n: int) -> VertexMap:
    return VertexMap(tuple(range(n)), n)


def disjoint_union(g1: Graph, g2: Graph) -> tuple[Graph, VertexMap, VertexMap]:
    """Disjoint union; g1 keeps its ids, g2 is shifted past them."""
    n = g1.n + g2.n
    edges = list(g1.edge_list)
    edges.extend((u + g1.n, v + g1.n) for u, v in g2.edge_list)
    out = Graph.make(n, edges)
    m1 = VertexMap(tuple(range(g1.n)), n)
    m2 = VertexMap(tuple(range(g1.n, n)), n)
    return out, m1, m2


def attach_pointed(host: Graph, v: int, label: PointedGraph) -> tuple[Graph, VertexMap]:
    """Attach a fresh copy of label, identifying its point with host vertex v.

    Host vertices keep their ids; the returned map sends label vertices into
    the result.
    """
    if not (0 <= v < host.n):
        raise GraphError(f"attach point {v} outside 0..{host.n - 1}")
    images = [0] * label.n
    nxt = host.n
    for w in range(label.n):
        if w == label.point:
            images[w] = v
        else:
            images[w] = nxt
            nxt += 1
    edges = list(host.edge_list)
    for a, b in label.graph.edge_list:
        edges.append((images[a], images[b]))
    return Graph.make(nxt, edges), VertexMap(tuple(images), nxt)


def add_pendant_path(host: Graph, v: int, length: int) -> Graph:
    """Hang a path of `length` fresh vertices off host vertex v."""
    if not (0 <= v < host.n):
        raise GraphError(f"vertex {v} outside 0..{host.n - 1}")
    if length < 1:
        raise GraphError("pendant path length must be at least 1")
    edges = list(host.edge_list)
    prev = v
    for i in range(length):
        nxt = host.n + i
        edges.append((prev, nxt))
        prev = nxt
    return Graph.make(host.n + length, edges)


def path_graph(n: int) -> Graph:
    return Graph.make(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.make(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.make(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def is_connected(g: Graph) -> bool:
    """True iff g has at most one connected component."""
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def underlying_graph(d: Digraph | ColoredDigraph) -> Graph:
    """Forget directions and colors; antiparallel arc pairs merge to one edge."""
    edges = set()
    for a in d.arc_list:
        u, v = a[0], a[1]
        edges.add((min(u, v), max(u, v)))
    return Graph(d.n, frozenset(edges))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexMap]:
    """Induced subgraph on the given vertices, relabeled in sorted order.

    The returned map sends old ids of the chosen vertices to new ids.
    """
    chosen = sorted(set(vertices))
    index = {v: i for i, v in enumerate(chosen)}
    edges = [
        (index[u], index[v])
        for u, v in g.edge_list
        if u in index and v in index
    ]
    sub = Graph.make(len(chosen), edges)
    return sub, VertexMap(tuple(index[v] for v in chosen), len(chosen))


def apply_permutation(g: Graph, p: tuple[int, ...]) -> Graph:
    """Relabel g by the permutation p (vertex v becomes p[v])."""
    return Graph.make(g.n, [(p[u], p[v]) for u, v in g.edge_list])
