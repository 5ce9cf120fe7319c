"""
Core graph types.

Vertices are dense indices 0..n-1. Edges are stored normalized as (min, max)
tuples in a frozenset, so equality of two graphs is equality of edge sets.
"""

from collections.abc import Iterable

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.errors import (
    GraphFormatError,
    PartitionError,
    SubgraphMismatchError,
    VertexRangeError,
)

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _edge_problem(vertex_count: int, edges: Iterable[Edge]) -> str | None:
    for u, v in edges:
        if u == v:
            return f"loop at vertex {u}"
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            return f"edge ({u}, {v}) out of range for {vertex_count} vertices"
    return None


def _partition_problem(vertex_count: int, blocks: Iterable[Iterable[int]]) -> str | None:
    seen: set[int] = set()
    for block in blocks:
        block = set(block)
        if not block:
            return "empty block"
        outside = [v for v in block if not 0 <= v < vertex_count]
        if outside:
            return f"vertex {outside[0]} out of range for {vertex_count} vertices"
        if seen & block:
            return f"vertex {min(seen & block)} appears in two blocks"
        seen |= block
    if len(seen) != vertex_count:
        missing = min(set(range(vertex_count)) - seen)
        return f"vertex {missing} is not covered"
    return None


class Graph(BaseModel):
    """Finite simple undirected graph."""

    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(ge=0, description="Vertices are 0..vertex_count-1")
    edges: frozenset[Edge] = Field(default_factory=frozenset)

    @field_validator("edges")
    @classmethod
    def normalize_edges(cls, v: frozenset[Edge]) -> frozenset[Edge]:
        return frozenset(normalize_edge(a, b) for a, b in v)

    @model_validator(mode="after")
    def check_simple(self) -> "Graph":
        problem = _edge_problem(self.vertex_count, self.edges)
        if problem:
            raise ValueError(problem)
        return self

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph, raising domain errors instead of ValidationError."""
        edge_list = [normalize_edge(int(u), int(v)) for u, v in edges]
        for u, v in edge_list:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
        if vertex_count < 0:
            raise VertexRangeError("vertex count must be non-negative")
        problem = _edge_problem(vertex_count, edge_list)
        if problem:
            raise VertexRangeError(problem)
        return cls.model_construct(vertex_count=vertex_count, edges=frozenset(edge_list))

    @classmethod
    def null(cls, n: int) -> "Graph":
        return cls.model_construct(vertex_count=n, edges=frozenset())

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise VertexRangeError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabel nodes to 0..n-1 in sorted order; self-loops are rejected."""
        h = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls.from_edges(h.number_of_nodes(), h.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.sorted_edges())
        return g

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def check_vertices(self, vertices: Iterable[int]) -> frozenset[int]:
        """Return the vertices as a frozenset, raising on anything out of range."""
        result = frozenset(int(v) for v in vertices)
        bad = sorted(v for v in result if not 0 <= v < self.vertex_count)
        if bad:
            raise VertexRangeError(
                f"vertex {bad[0]} out of range for {self.vertex_count} vertices"
            )
        return result


class SpanningSubgraph(BaseModel):
    """Edge-subset view of a parent graph on the parent's full vertex set."""

    model_config = ConfigDict(frozen=True)

    parent: Graph
    edges: frozenset[Edge] = Field(default_factory=frozenset)

    @field_validator("edges")
    @classmethod
    def normalize_edges(cls, v: frozenset[Edge]) -> frozenset[Edge]:
        return frozenset(normalize_edge(a, b) for a, b in v)

    @model_validator(mode="after")
    def check_subset(self) -> "SpanningSubgraph":
        extra = self.edges - self.parent.edges
        if extra:
            raise ValueError(f"edge {min(extra)} is not an edge of the parent graph")
        return self

    @classmethod
    def of(cls, parent: Graph, edges: Iterable[Edge]) -> "SpanningSubgraph":
        """Build a spanning subgraph, raising SubgraphMismatchError on foreign edges."""
        edge_set = frozenset(normalize_edge(int(u), int(v)) for u, v in edges)
        extra = edge_set - parent.edges
        if extra:
            u, v = min(extra)
            raise SubgraphMismatchError(f"edge ({u}, {v}) is not an edge of G")
        return cls.model_construct(parent=parent, edges=edge_set)

    @classmethod
    def from_graph(cls, parent: Graph, h: Graph) -> "SpanningSubgraph":
        if h.vertex_count != parent.vertex_count:
            raise SubgraphMismatchError(
                f"subgraph has {h.vertex_count} vertices, G has {parent.vertex_count}"
            )
        return cls.of(parent, h.edges)

    @classmethod
    def whole(cls, parent: Graph) -> "SpanningSubgraph":
        return cls.model_construct(parent=parent, edges=parent.edges)

    @classmethod
    def null(cls, parent: Graph) -> "SpanningSubgraph":
        return cls.model_construct(parent=parent, edges=frozenset())

    @property
    def vertex_count(self) -> int:
        return self.parent.vertex_count

    def as_graph(self) -> Graph:
        return Graph.model_construct(vertex_count=self.parent.vertex_count, edges=self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def outside_edges(self) -> list[Edge]:
        """Edges of the parent not in this subgraph, sorted."""
        return sorted(self.parent.edges - self.edges)


class Partition(BaseModel):
    """Disjoint nonempty blocks covering 0..vertex_count-1."""

    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(ge=0)
    blocks: tuple[frozenset[int], ...]

    @model_validator(mode="after")
    def check_blocks(self) -> "Partition":
        problem = _partition_problem(self.vertex_count, self.blocks)
        if problem:
            raise ValueError(problem)
        return self

    @classmethod
    def from_blocks(cls, vertex_count: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        block_list = [frozenset(int(v) for v in b) for b in blocks]
        problem = _partition_problem(vertex_count, block_list)
        if problem:
            raise PartitionError(problem)
        return cls.model_construct(vertex_count=vertex_count, blocks=tuple(block_list))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls.model_construct(
            vertex_count=n, blocks=tuple(frozenset({v}) for v in range(n))
        )

    @classmethod
    def whole(cls, n: int) -> "Partition":
        blocks = (frozenset(range(n)),) if n else ()
        return cls.model_construct(vertex_count=n, blocks=blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_index(self) -> list[int]:
        """block_index()[v] is the position of v's block."""
        index = [0] * self.vertex_count
        for i, block in enumerate(self.blocks):
            for v in block:
                index[v] = i
        return index

    def sorted_blocks(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]
