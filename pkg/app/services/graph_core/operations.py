from collections.abc import Iterable

import networkx as nx

from app.core.errors import PartitionError

from .models import Graph, Partition, SpanningSubgraph, normalize_edge


def complement_within(h: SpanningSubgraph) -> SpanningSubgraph:
    """The complement of H in G: same vertices, edges E(G) - E(H)."""
    return SpanningSubgraph.model_construct(
        parent=h.parent, edges=h.parent.edges - h.edges
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """
    Subgraph induced by a vertex set, relabeled to 0..|S|-1 in ascending order.

    Returns the graph and the map original vertex -> new index.
    """
    chosen = sorted(g.check_vertices(vertices))
    mapping = {v: i for i, v in enumerate(chosen)}
    edges = [
        (mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping
    ]
    return Graph.from_edges(len(chosen), edges), mapping


def _check_partition_of(g: Graph, p: Partition) -> None:
    if p.vertex_count != g.vertex_count:
        raise PartitionError(
            f"partition covers {p.vertex_count} vertices, graph has {g.vertex_count}"
        )


def quotient(g: Graph, p: Partition) -> Graph:
    """Blocks become vertices; blocks are adjacent iff some G-edge crosses them."""
    _check_partition_of(g, p)
    index = p.block_index()
    edges = {
        normalize_edge(index[u], index[v]) for u, v in g.edges if index[u] != index[v]
    }
    return Graph.from_edges(len(p), edges)


def union_of_induced(g: Graph, p: Partition) -> SpanningSubgraph:
    """Disjoint union of the induced subgraphs G[V_i], as a spanning subgraph of G."""
    _check_partition_of(g, p)
    index = p.block_index()
    return SpanningSubgraph.model_construct(
        parent=g, edges=frozenset(e for e in g.edges if index[e[0]] == index[e[1]])
    )


def components(g: Graph) -> Partition:
    """Connected components ordered by their minimum vertex."""
    blocks = sorted(
        (frozenset(c) for c in nx.connected_components(g.to_networkx())), key=min
    )
    return Partition.model_construct(vertex_count=g.vertex_count, blocks=tuple(blocks))


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and len(components(g)) == 1


def is_bipartite(g: Graph) -> list[int] | None:
    """
    A proper 2-coloring with sides 0/1, or None when G has an odd cycle.

    The lowest vertex of every component gets side 0.
    """
    nxg = g.to_networkx()
    if not nx.is_bipartite(nxg):
        return None
    color = nx.bipartite.color(nxg)
    sides = [color[v] for v in range(g.vertex_count)]
    for block in components(g).blocks:
        if sides[min(block)] == 1:
            for v in block:
                sides[v] = 1 - sides[v]
    return sides


def complete_multipartite_parts(g: Graph) -> Partition | None:
    """
    Parts of G when G is complete multipartite, else None.

    G is complete multipartite exactly when its complement is a disjoint
    union of cliques; the parts are those cliques.
    """
    if g.vertex_count == 0:
        return None
    complement = nx.complement(g.to_networkx())
    parts = sorted(
        (frozenset(c) for c in nx.connected_components(complement)), key=min
    )
    for part in parts:
        size = len(part)
        if complement.subgraph(part).number_of_edges() != size * (size - 1) // 2:
            return None
    return Partition.model_construct(vertex_count=g.vertex_count, blocks=tuple(parts))
