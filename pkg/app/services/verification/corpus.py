"""
Test instances for the verification suites: the connected graphs of the
networkx graph atlas, seeded random graphs, and set partitions.
"""

import random
from collections.abc import Iterator
from functools import lru_cache

import networkx as nx

from app.services.graph_core import Graph, Partition, SpanningSubgraph

ATLAS_MAX_VERTICES = 7


@lru_cache(maxsize=1)
def _atlas() -> tuple[Graph, ...]:
    graphs = []
    for nxg in nx.graph_atlas_g():
        if nxg.number_of_nodes() and nx.is_connected(nxg):
            graphs.append(Graph.from_networkx(nxg))
    return tuple(graphs)


def connected_graphs(max_vertices: int) -> Iterator[Graph]:
    """Every connected graph on 1..max_vertices vertices, one per isomorphism type."""
    if max_vertices > ATLAS_MAX_VERTICES:
        raise ValueError(f"the atlas stops at {ATLAS_MAX_VERTICES} vertices")
    for g in _atlas():
        if g.vertex_count <= max_vertices:
            yield g


def random_connected_graph(rng: random.Random, min_vertices: int, max_vertices: int) -> Graph:
    """gnp graphs with a random density, redrawn until connected."""
    n = rng.randint(min_vertices, max_vertices)
    while True:
        nxg = nx.gnp_random_graph(n, rng.uniform(0.3, 0.9), seed=rng.randrange(2**32))
        if nx.is_connected(nxg):
            return Graph.from_networkx(nxg)


def random_subset(rng: random.Random, items: list) -> list:
    return [item for item in items if rng.random() < 0.5]


def spanning_subgraphs(g: Graph) -> Iterator[SpanningSubgraph]:
    edges = g.sorted_edges()
    for mask in range(1 << len(edges)):
        yield SpanningSubgraph.model_construct(
            parent=g, edges=frozenset(e for i, e in enumerate(edges) if mask >> i & 1)
        )


def set_partitions(n: int) -> Iterator[Partition]:
    """All partitions of 0..n-1, as restricted growth strings."""
    labels = [0] * n

    def grow(v: int, blocks: int) -> Iterator[Partition]:
        if v == n:
            grouped: list[set[int]] = [set() for _ in range(blocks)]
            for u, label in enumerate(labels):
                grouped[label].add(u)
            yield Partition.model_construct(
                vertex_count=n, blocks=tuple(frozenset(b) for b in grouped)
            )
            return
        for label in range(blocks + 1):
            labels[v] = label
            yield from grow(v + 1, max(blocks, label + 1))

    yield from grow(0, 0)


def describe(h: SpanningSubgraph) -> str:
    g_edges = " ".join(f"{u + 1}-{v + 1}" for u, v in h.parent.sorted_edges())
    h_edges = " ".join(f"{u + 1}-{v + 1}" for u, v in h.sorted_edges())
    return f"n={h.vertex_count} G=[{g_edges}] H=[{h_edges}]"


def clique_in_complete(n: int, m: int) -> SpanningSubgraph:
    """K_{m-1} on vertices 0..m-2 plus isolated vertices, inside K_n."""
    parent = Graph.complete(n)
    clique = frozenset(e for e in parent.edges if e[1] <= m - 2)
    return SpanningSubgraph.model_construct(parent=parent, edges=clique)
