from .models import Edge, Graph, Partition, SpanningSubgraph, normalize_edge
from .operations import (
    complement_within,
    complete_multipartite_parts,
    components,
    induced_subgraph,
    is_bipartite,
    is_connected,
    quotient,
    union_of_induced,
)

__all__ = [
    "Edge",
    "Graph",
    "Partition",
    "SpanningSubgraph",
    "complement_within",
    "complete_multipartite_parts",
    "components",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "normalize_edge",
    "quotient",
    "union_of_induced",
]
