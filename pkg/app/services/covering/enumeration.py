"""
Enumeration of permutation voltages up to covering isomorphism.

Every n-fold cover of a connected base is derived from a voltage that is the
identity on a fixed spanning tree; two such voltages give isomorphic covers
over the identity when they differ by one simultaneous conjugation.
"""

from collections.abc import Iterator
from itertools import product

import networkx as nx

from app.core.errors import PreconditionError, SizeLimitError
from app.services.graph_core import Edge, Graph, is_connected, normalize_edge

from . import permutations as perm
from .models import PermutationVoltage

# Beyond this many candidate assignments the enumeration is refused.
_MAX_CANDIDATES = 200_000


def spanning_tree_edges(g: Graph) -> frozenset[Edge]:
    """BFS tree from vertex 0 of a connected graph."""
    tree = nx.bfs_tree(g.to_networkx(), 0)
    return frozenset(normalize_edge(u, v) for u, v in tree.edges())


def tree_normalized_voltages(g: Graph, fold: int) -> Iterator[PermutationVoltage]:
    """
    One voltage per conjugacy orbit of co-tree assignments, identity on the
    BFS spanning tree. Yielded in lexicographic order of the orbit minimum.
    """
    if not is_connected(g):
        raise PreconditionError("voltage enumeration needs a connected base graph")
    tree = spanning_tree_edges(g)
    cotree = [e for e in g.sorted_edges() if e not in tree]
    group = list(perm.all_permutations(fold))
    if len(group) ** len(cotree) > _MAX_CANDIDATES:
        raise SizeLimitError(
            f"{len(group)}^{len(cotree)} co-tree assignments exceed the enumeration limit"
        )

    ident = perm.identity(fold)
    seen: set[tuple[perm.Permutation, ...]] = set()
    for choice in product(group, repeat=len(cotree)):
        key = min(tuple(perm.conjugate(p, s) for p in choice) for s in group)
        if key in seen:
            continue
        seen.add(key)
        voltages = {e: ident for e in tree}
        voltages.update(zip(cotree, key, strict=True))
        yield PermutationVoltage.from_canonical(g, fold, voltages)
