import networkx as nx

from app.core.errors import PreconditionError
from app.logging import get_logger
from app.services.graph_core import Graph, SpanningSubgraph, is_bipartite, is_connected

from . import permutations as perm
from .models import CoveringGraph, CoveringReport, PermutationVoltage, Signing

logger = get_logger(__name__)


def signing_from_cosupport(h: SpanningSubgraph) -> Signing:
    """phi_H: +1 on E(H), -1 on E(G) - E(H)."""
    return Signing.model_construct(base=h.parent, negative_edges=h.parent.edges - h.edges)


def double_cover_index(v: int, g: int) -> int:
    """Index of v_g in the double cover, g in {1, -1}."""
    return 2 * v + (0 if g == 1 else 1)


def derive_double_cover(phi: Signing) -> CoveringGraph:
    """
    Derived graph of a signing.

    Vertex v_g has index 2v (g = +1) or 2v + 1 (g = -1). The edge (u, v) with
    sign s lifts to u_1 -- v_s and u_-1 -- v_-s.
    """
    base = phi.base
    edges = []
    for u, v in base.sorted_edges():
        s = phi.sign(u, v)
        edges.append((double_cover_index(u, 1), double_cover_index(v, s)))
        edges.append((double_cover_index(u, -1), double_cover_index(v, -s)))
    labels = tuple((v, sheet) for v in base.vertices() for sheet in (1, 2))
    return CoveringGraph(
        graph=Graph.from_edges(2 * base.vertex_count, edges),
        base=base,
        fold=2,
        fiber_label=labels,
    )


def nfold_index(v: int, sheet: int, fold: int) -> int:
    return fold * v + (sheet - 1)


def derive_nfold_cover(phi: PermutationVoltage) -> CoveringGraph:
    """
    Permutation derived graph: vertices V(base) x {1..n}, and for every edge
    (u, v) with u < v and every sheet j, the edge (u, j) -- (v, phi(u, v)(j)).
    """
    base, n = phi.base, phi.fold
    edges = [
        (nfold_index(u, j, n), nfold_index(v, perm.apply(p, j), n))
        for (u, v), p in phi.assign
        for j in range(1, n + 1)
    ]
    labels = tuple((v, j) for v in base.vertices() for j in range(1, n + 1))
    return CoveringGraph(
        graph=Graph.from_edges(n * base.vertex_count, edges),
        base=base,
        fold=n,
        fiber_label=labels,
    )


def verify_covering(c: CoveringGraph) -> CoveringReport:
    """
    Check that the projection is fold-to-one and a bijection from N(x) onto
    N(p(x)) at every covering vertex x.
    """
    projection = c.projection()
    fiber_sizes = [0] * c.base.vertex_count
    for v in projection:
        fiber_sizes[v] += 1
    for v, size in enumerate(fiber_sizes):
        if size != c.fold:
            in_fiber = [x for x, pv in enumerate(projection) if pv == v]
            return CoveringReport(
                valid=False,
                violating_vertex=in_fiber[0] if in_fiber else None,
                flagged=tuple(in_fiber),
                reason=f"fiber over base vertex {v} has {size} vertices, expected {c.fold}",
            )

    base_adj = c.base.adjacency()
    cover_adj = c.graph.adjacency()
    flagged = []
    for x in c.graph.vertices():
        images = [projection[y] for y in cover_adj[x]]
        if len(images) != len(set(images)) or set(images) != base_adj[projection[x]]:
            flagged.append(x)
    if flagged:
        logger.debug("covering check failed", flagged=flagged)
        return CoveringReport(
            valid=False,
            violating_vertex=flagged[0],
            flagged=tuple(flagged),
            reason=f"projection is not a bijection on the neighborhood of vertex {flagged[0]}",
        )
    return CoveringReport(valid=True)


def z2_cycle_parity_check(phi: Signing) -> bool:
    """
    Whether the double cover of a connected non-bipartite base is bipartite,
    decided on the base alone: every fundamental cycle C must have sign
    product +1 exactly when |C| is even.
    """
    base = phi.base
    if not is_connected(base):
        raise PreconditionError("cycle parity check needs a connected base graph")
    if is_bipartite(base) is not None:
        raise PreconditionError("cycle parity check needs a non-bipartite base graph")

    for cycle in nx.cycle_basis(base.to_networkx()):
        product = 1
        for u, v in zip(cycle, cycle[1:] + cycle[:1], strict=True):
            product *= phi.sign(u, v)
        if (product == 1) != (len(cycle) % 2 == 0):
            return False
    return True
