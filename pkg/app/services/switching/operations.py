from collections import deque
from collections.abc import Iterable, Iterator

import networkx as nx

from app.core.config import settings
from app.core.errors import SizeLimitError, SubgraphMismatchError
from app.logging import get_logger
from app.services.covering import (
    Signing,
    derive_double_cover,
    signing_from_cosupport,
)
from app.services.graph_core import Edge, Graph, SpanningSubgraph, components

from .models import SwitchWitness

logger = get_logger(__name__)


def _crosses(e: Edge, subset: frozenset[int]) -> bool:
    return (e[0] in subset) != (e[1] in subset)


def seidel_switch(h: SpanningSubgraph, subset: Iterable[int]) -> SpanningSubgraph:
    """
    H_X: on edges of G crossing (X, V - X) take the complement of H in G,
    elsewhere keep H.
    """
    x = h.parent.check_vertices(subset)
    edges = frozenset(e for e in h.parent.edges if (e in h.edges) != _crosses(e, x))
    return SpanningSubgraph.model_construct(parent=h.parent, edges=edges)


def switch_signing(phi: Signing, subset: Iterable[int]) -> Signing:
    """Reverse the sign of every edge with exactly one end in X."""
    x = phi.base.check_vertices(subset)
    cut = frozenset(e for e in phi.base.edges if _crosses(e, x))
    return Signing.model_construct(base=phi.base, negative_edges=phi.negative_edges ^ cut)


def _check_same_parent(h: SpanningSubgraph, k: SpanningSubgraph) -> None:
    if h.parent != k.parent:
        raise SubgraphMismatchError("subgraphs belong to different parent graphs")


def _potential(
    g: Graph, must_cross: frozenset[Edge], fixed: frozenset[Edge] | None = None
) -> list[int] | None:
    """
    Side 0/1 per vertex such that an edge crosses exactly when it is in
    `must_cross`, constrained on `fixed` edges if given, else on all of E(G).
    The lowest vertex of every component gets side 0. None if inconsistent.
    """
    constrained = g.edges if fixed is None else fixed
    adj: list[list[int]] = [[] for _ in g.vertices()]
    for u, v in constrained:
        adj[u].append(v)
        adj[v].append(u)
    side: list[int | None] = [None] * g.vertex_count
    for root in g.vertices():
        if side[root] is not None:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                e = (u, v) if u < v else (v, u)
                want = side[u] ^ (1 if e in must_cross else 0)
                if side[v] is None:
                    side[v] = want
                    queue.append(v)
                elif side[v] != want:
                    return None
    return [s or 0 for s in side]


def are_switching_equivalent(
    h: SpanningSubgraph, k: SpanningSubgraph
) -> SwitchWitness | None:
    """
    Witness X with H_X = K, or None.

    Solves s(u) s(v) = phi_H(e) phi_K(e) over every edge of G by BFS labeling;
    X is the set of vertices labeled -1.
    """
    _check_same_parent(h, k)
    sides = _potential(h.parent, h.edges ^ k.edges)
    if sides is None:
        return None
    subset = frozenset(v for v, s in enumerate(sides) if s == 1)
    return SwitchWitness.model_construct(source=h, target=k, subset=subset)


def _spanning_forest(g: Graph) -> frozenset[Edge]:
    nxg = g.to_networkx()
    forest: set[Edge] = set()
    for block in components(g).blocks:
        tree = nx.bfs_tree(nxg, min(block))
        forest.update((u, v) if u < v else (v, u) for u, v in tree.edges())
    return frozenset(forest)


def canonical_representative(h: SpanningSubgraph) -> SpanningSubgraph:
    """
    The unique member of [H] containing a fixed BFS spanning forest of G.

    Two subgraphs are switching equivalent iff their representatives are equal.
    """
    forest = _spanning_forest(h.parent)
    # A forest edge must cross X exactly when it is missing from H.
    sides = _potential(h.parent, forest - h.edges, fixed=forest)
    assert sides is not None  # forest constraints are always consistent
    return seidel_switch(h, (v for v, s in enumerate(sides) if s == 1))


def _check_class_limit(g: Graph, limit: int | None) -> int:
    limit = settings.switching_class_limit if limit is None else limit
    if g.vertex_count > limit:
        raise SizeLimitError(
            f"switching class enumeration is limited to {limit} vertices, got {g.vertex_count}"
        )
    return limit


def _subsets_up_to_complement(n: int) -> Iterator[frozenset[int]]:
    # X and V - X switch identically, so the top vertex can stay outside X.
    for mask in range(1 << max(n - 1, 0)):
        yield frozenset(v for v in range(n) if mask >> v & 1)


def enumerate_switching_class(
    h: SpanningSubgraph, limit: int | None = None
) -> list[SpanningSubgraph]:
    """All distinct H_X, ordered by sorted edge list."""
    _check_class_limit(h.parent, limit)
    members = {seidel_switch(h, x) for x in _subsets_up_to_complement(h.vertex_count)}
    logger.debug(
        "switching class enumerated", vertices=h.vertex_count, size=len(members)
    )
    return sorted(members, key=lambda m: m.sorted_edges())


def class_representatives(g: Graph) -> Iterator[SpanningSubgraph]:
    """One subgraph per switching class: the forest plus any set of co-forest edges."""
    forest = _spanning_forest(g)
    coforest = [e for e in g.sorted_edges() if e not in forest]
    for mask in range(1 << len(coforest)):
        chosen = (e for i, e in enumerate(coforest) if mask >> i & 1)
        yield SpanningSubgraph.model_construct(parent=g, edges=forest | frozenset(chosen))


def count_cover_classes(
    g: Graph, limit: int | None = None, edge_limit: int | None = None
) -> int:
    """
    Number of switching classes among the 2^|E| spanning subgraphs, i.e. the
    number of double covers of G up to covering isomorphism.

    Small edge sets are canonicalized exhaustively; larger ones are counted
    through their class representatives.
    """
    _check_class_limit(g, limit)
    edge_limit = settings.exhaustive_edge_limit if edge_limit is None else edge_limit
    if g.edge_count <= edge_limit:
        edges = g.sorted_edges()
        seen = set()
        for mask in range(1 << len(edges)):
            h = SpanningSubgraph.model_construct(
                parent=g,
                edges=frozenset(e for i, e in enumerate(edges) if mask >> i & 1),
            )
            seen.add(canonical_representative(h).edges)
        return len(seen)
    coforest = g.edge_count - len(_spanning_forest(g))
    if coforest > edge_limit:
        raise SizeLimitError(f"2^{coforest} switching classes exceed the edge limit")
    return sum(1 for _ in class_representatives(g))


def connected_cover_types(g: Graph, edge_limit: int | None = None) -> list[SpanningSubgraph]:
    """
    One representative H per isomorphism type of connected double cover G^{phi_H}.
    """
    edge_limit = settings.exhaustive_edge_limit if edge_limit is None else edge_limit
    coforest = g.edge_count - len(_spanning_forest(g))
    if coforest > edge_limit:
        raise SizeLimitError(f"2^{coforest} switching classes exceed the edge limit")

    kept: list[tuple[SpanningSubgraph, nx.Graph]] = []
    for rep in class_representatives(g):
        cover = derive_double_cover(signing_from_cosupport(rep)).graph.to_networkx()
        if not nx.is_connected(cover):
            continue
        if any(nx.is_isomorphic(cover, other) for _, other in kept):
            continue
        kept.append((rep, cover))
    return [rep for rep, _ in kept]
