"""Immutable simple graphs and the structural primitives built on them."""

import logging
from collections import deque
from functools import cached_property
from typing import Iterable, Mapping, Optional

import networkx as nx

from evenpair.models import Path
from exceptions.exceptions import (
    AdjacentVerticesError,
    EmptyVertexSetError,
    PreconditionViolationError,
    UnknownVertexError,
)

logger = logging.getLogger(__name__)

VertexId = int
VertexSet = frozenset[int]


class Graph:
    """Simple undirected graph with stable integer vertex ids.

    Iteration over vertices and neighbors is always in ascending id order.
    Equality compares structure only; labels are display metadata.
    """

    def __init__(
        self,
        vertices: Iterable[VertexId],
        edges: Iterable[tuple[VertexId, VertexId]] = (),
        labels: Optional[Mapping[VertexId, str]] = None,
    ):
        adj: dict[VertexId, set[VertexId]] = {}
        for v in vertices:
            if v in adj:
                raise PreconditionViolationError("Graph", f"duplicate vertex id {v}")
            adj[v] = set()
        for u, v in edges:
            if u == v:
                raise PreconditionViolationError("Graph", f"self-loop on vertex {u}")
            if u not in adj:
                raise UnknownVertexError(u)
            if v not in adj:
                raise UnknownVertexError(v)
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(adj[v]) for v in sorted(adj)}
        self._vertices = tuple(self._adj)
        self._labels = {v: labels[v] for v in self._vertices if v in labels} if labels else {}

    @classmethod
    def _from_adjacency(
        cls, adj: Mapping[VertexId, frozenset[VertexId]], labels: Mapping[VertexId, str]
    ) -> "Graph":
        g = cls.__new__(cls)
        g._adj = {v: adj[v] for v in sorted(adj)}
        g._vertices = tuple(g._adj)
        g._labels = dict(labels)
        return g

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[VertexId, VertexId]],
        labels: Optional[Mapping[VertexId, str]] = None,
    ) -> "Graph":
        return cls(range(n), edges, labels)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> VertexSet:
        return frozenset(self._vertices)

    @property
    def labels(self) -> dict[VertexId, str]:
        return dict(self._labels)

    def label(self, v: VertexId) -> str:
        return self._labels.get(v, str(v))

    def adj(self, v: VertexId) -> VertexSet:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(v)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return v in self.adj(u)

    def degree(self, v: VertexId) -> int:
        return len(self.adj(v))

    def edges(self) -> list[tuple[VertexId, VertexId]]:
        return [(u, v) for u in self._vertices for v in self.sorted_neighbors(u) if u < v]

    def sorted_neighbors(self, v: VertexId) -> tuple[VertexId, ...]:
        return self._sorted_adj[v]

    @cached_property
    def _sorted_adj(self) -> dict[VertexId, tuple[VertexId, ...]]:
        return {v: tuple(sorted(nbrs)) for v, nbrs in self._adj.items()}

    @cached_property
    def _masks(self) -> dict[VertexId, int]:
        masks = {}
        for v, nbrs in self._adj.items():
            mask = 0
            for w in nbrs:
                mask |= 1 << w
            masks[v] = mask
        return masks

    def adjacency_mask(self, v: VertexId) -> int:
        """Neighbors of v as a bitset indexed by vertex id."""
        if v not in self._adj:
            raise UnknownVertexError(v)
        return self._masks[v]

    def check_vertices(self, vertices: Iterable[VertexId]) -> None:
        for v in vertices:
            if v not in self._adj:
                raise UnknownVertexError(v)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(tuple((v, tuple(sorted(nbrs))) for v, nbrs in self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def neighbors(g: Graph, v: VertexId) -> VertexSet:
    return g.adj(v)


def complement(g: Graph) -> Graph:
    everything = g.vertex_set
    adj = {v: everything - g.adj(v) - {v} for v in g.vertices}
    return Graph._from_adjacency(adj, g.labels)


def induced_subgraph(g: Graph, s: Iterable[VertexId]) -> Graph:
    keep = frozenset(s)
    g.check_vertices(keep)
    adj = {v: g.adj(v) & keep for v in keep}
    labels = {v: name for v, name in g.labels.items() if v in keep}
    return Graph._from_adjacency(adj, labels)


def contract(g: Graph, x: VertexId, y: VertexId) -> tuple[Graph, VertexId]:
    """Return G/xy and the id of the merged vertex.

    The merged vertex takes the id max(V) + 1 so ids are never reused along
    a sequence of contractions.
    """
    g.check_vertices((x, y))
    if x == y:
        raise PreconditionViolationError("contract", f"vertices must differ, got {x} twice")
    if g.has_edge(x, y):
        raise AdjacentVerticesError(x, y)

    fresh = max(g.vertices) + 1
    merged_nbrs = (g.adj(x) | g.adj(y)) - {x, y}
    adj: dict[VertexId, frozenset[VertexId]] = {}
    for v in g.vertices:
        if v in (x, y):
            continue
        nbrs = g.adj(v)
        if v in merged_nbrs:
            nbrs = (nbrs - {x, y}) | {fresh}
        adj[v] = nbrs
    adj[fresh] = frozenset(merged_nbrs)

    labels = {v: name for v, name in g.labels.items() if v not in (x, y)}
    if g.labels:
        labels[fresh] = f"{g.label(x)}+{g.label(y)}"
    return Graph._from_adjacency(adj, labels), fresh


def is_clique(g: Graph, s: Iterable[VertexId]) -> bool:
    members = frozenset(s)
    g.check_vertices(members)
    return all(members - {v} <= g.adj(v) for v in members)


def is_co_connected(g: Graph, t: Iterable[VertexId]) -> bool:
    """True iff the complement of g restricted to t is connected."""
    members = frozenset(t)
    if not members:
        raise EmptyVertexSetError("is_co_connected")
    g.check_vertices(members)
    start = min(members)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in members - g.adj(v) - seen - {v}:
            seen.add(w)
            queue.append(w)
    return len(seen) == len(members)


def complete_set(g: Graph, t: Iterable[VertexId]) -> VertexSet:
    """C(T): the vertices outside t that see every vertex of t."""
    members = frozenset(t)
    if not members:
        raise EmptyVertexSetError("complete_set")
    g.check_vertices(members)
    result = None
    for v in members:
        result = g.adj(v) if result is None else result & g.adj(v)
    return frozenset(result - members)


def is_simplicial(g: Graph, v: VertexId) -> bool:
    return is_clique(g, g.adj(v))


def connected_components(g: Graph) -> list[VertexSet]:
    seen: set[VertexId] = set()
    components = []
    for start in g.vertices:
        if start in seen:
            continue
        component = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adj(v):
                if w not in component:
                    component.add(w)
                    queue.append(w)
        seen |= component
        components.append(frozenset(component))
    return components


def is_disjoint_union_of_cliques(g: Graph) -> bool:
    return all(is_clique(g, component) for component in connected_components(g))


def is_chordless_path(g: Graph, vertices: Iterable[VertexId]) -> bool:
    """Consecutive vertices adjacent, all distinct, and no chord."""
    sequence = list(vertices)
    g.check_vertices(sequence)
    if len(set(sequence)) != len(sequence):
        return False
    position = {v: i for i, v in enumerate(sequence)}
    for i, v in enumerate(sequence):
        for w in g.adj(v):
            j = position.get(w)
            if j is not None and abs(i - j) != 1:
                return False
        if i + 1 < len(sequence) and not g.has_edge(v, sequence[i + 1]):
            return False
    return True


def shortest_path(
    g: Graph, u: VertexId, v: VertexId, forbidden: Iterable[VertexId] = frozenset()
) -> Optional[Path]:
    """Breadth-first shortest u-v path avoiding ``forbidden``.

    Neighbors are expanded in ascending id order and the first discoverer
    becomes the parent, which fixes the tie-break among equal-length paths.
    A shortest path in an induced subgraph is chordless in g.
    """
    g.check_vertices((u, v))
    blocked = frozenset(forbidden)
    if u in blocked or v in blocked:
        raise PreconditionViolationError("shortest_path", "endpoints may not be forbidden")
    if u == v:
        return Path(vertices=(u,))

    parent: dict[VertexId, VertexId] = {u: u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x in g.sorted_neighbors(w):
            if x in parent or x in blocked:
                continue
            parent[x] = w
            if x == v:
                route = [v]
                while route[-1] != u:
                    route.append(parent[route[-1]])
                return Path(vertices=tuple(reversed(route)))
            queue.append(x)
    return None


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges())
    return G


def from_networkx(G: nx.Graph) -> Graph:
    return Graph(sorted(G.nodes), G.edges)


def relabel(g: Graph, labels: Mapping[VertexId, str]) -> Graph:
    g.check_vertices(labels)
    merged = {**g.labels, **labels}
    return Graph._from_adjacency({v: g.adj(v) for v in g.vertices}, merged)
