"""
Brute-force reference implementations.

Plain enumeration over itertools products and bitmasks; nothing here
shares code with the solvers it is used to check.
"""

from itertools import product

from app.core.config import settings
from app.core.errors import SizeLimitError
from app.services.graph_core import Graph, SpanningSubgraph


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise SizeLimitError(f"{what} oracle is limited to {limit} vertices, got {n}")


def _proper_colorings(n: int, edges: list[tuple[int, int]], k: int) -> list[tuple[int, ...]]:
    return [
        colors
        for colors in product(range(1, k + 1), repeat=n)
        if all(colors[u] != colors[v] for u, v in edges)
    ]


def brute_chromatic(g: Graph, limit: int | None = None) -> int:
    """Least k with some proper assignment in {1..k}^V."""
    _guard(g.vertex_count, settings.oracle_chromatic_limit if limit is None else limit, "chromatic")
    n = g.vertex_count
    if n == 0:
        return 0
    edges = sorted(g.edges)
    for k in range(1, n + 1):
        for colors in product(range(1, k + 1), repeat=n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return n


def brute_chi_rel(h: SpanningSubgraph, limit: int | None = None) -> int:
    """
    Least k such that two proper k-colorings f, g of H satisfy f(u) != g(v)
    and f(v) != g(u) on every edge uv of G outside H.
    """
    _guard(h.vertex_count, settings.oracle_chi_rel_limit if limit is None else limit, "relative")
    n = h.vertex_count
    if n == 0:
        return 0
    inside = sorted(h.edges)
    outside = sorted(h.parent.edges - h.edges)
    for k in range(1, 2 * n + 1):
        proper = _proper_colorings(n, inside, k)
        for f in proper:
            for g in proper:
                if all(f[u] != g[v] and f[v] != g[u] for u, v in outside):
                    return k
    return 2 * n


def brute_switch_equiv(
    h: SpanningSubgraph, k: SpanningSubgraph, limit: int | None = None
) -> frozenset[int] | None:
    """
    First X in lexicographic subset order whose switch takes H to K.

    Subsets are scanned as bitmasks 0 .. 2^n - 1 with vertex v on bit v, so
    {3} comes after {0, 1, 2}.
    """
    _guard(h.vertex_count, settings.oracle_switch_limit if limit is None else limit, "switching")
    n = h.vertex_count
    for mask in range(1 << n):
        x = frozenset(v for v in range(n) if mask >> v & 1)
        switched = {
            (u, v)
            for u, v in h.parent.edges
            if ((u, v) in h.edges) != ((u in x) != (v in x))
        }
        if switched == k.edges:
            return x
    return None
