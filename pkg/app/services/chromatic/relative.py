"""
Relative chromatic number chi_G(H) and its n-fold generalization.

Two independent routes: a joint backtracking search over pairs (tuples) of
colorings of H, and the chromatic number of the derived covering graph.
"""

from functools import lru_cache

from app.core.errors import ImproperColoringError
from app.logging import get_logger
from app.metrics import search_nodes_total
from app.services.covering import (
    PermutationVoltage,
    derive_double_cover,
    derive_nfold_cover,
    signing_from_cosupport,
)
from app.services.covering import permutations as perm
from app.services.covering.derive import double_cover_index, nfold_index
from app.services.graph_core import Graph, SpanningSubgraph

from .models import Coloring, CompatibilityReport, CompatiblePair, CompatibleTuple
from .solver import ChromaticSolver, optimal_coloring

logger = get_logger(__name__)

DirectedVoltages = dict[tuple[int, int], tuple[int, ...]]


def check_compatible(h: SpanningSubgraph, f: Coloring, g: Coloring) -> CompatibilityReport:
    """
    Whether f(u) != g(v) and f(v) != g(u) on every edge of G - H.

    Raises ImproperColoringError when f or g is not proper on H.
    """
    hg = h.as_graph()
    for label, c in (("f", f), ("g", g)):
        if c.graph.vertex_count != h.vertex_count:
            raise ImproperColoringError(
                f"{label} colors {c.graph.vertex_count} vertices, H has {h.vertex_count}"
            )
        c.on(hg).require_proper(label)
    for u, v in h.outside_edges():
        if f[u] == g[v] or f[v] == g[u]:
            return CompatibilityReport(
                compatible=False,
                edge=(u, v),
                detail=f"f({u})={f[u]} g({u})={g[u]} f({v})={f[v]} g({v})={g[v]}",
            )
    return CompatibilityReport(compatible=True)


class _TupleSearch:
    """
    Joint backtracking over colorings f_1..f_n of H.

    Vertices are taken in descending G-degree order and, per vertex, sheets
    1..n. Colors of f_1 are introduced in increasing order; the other sheets
    range over the whole palette.
    """

    def __init__(self, h: SpanningSubgraph, directed: DirectedVoltages, fold: int):
        self.fold = fold
        n = h.vertex_count
        degree = [0] * n
        for u, v in h.parent.edges:
            degree[u] += 1
            degree[v] += 1
        self.order = sorted(range(n), key=lambda v: (-degree[v], v))
        position = {v: i for i, v in enumerate(self.order)}
        # checks[v][j]: pairs (u, i) placed earlier with f_j(v) != f_i(u)
        self.checks: list[list[list[tuple[int, int]]]] = [
            [[] for _ in range(fold + 1)] for _ in range(n)
        ]
        for (u, v), p in directed.items():
            if position[u] < position[v]:
                for i in range(1, fold + 1):
                    self.checks[v][perm.apply(p, i)].append((u, i))
        self.values = [[0] * (fold + 1) for _ in range(n)]
        self.k = 0
        self.found: list[list[int]] | None = None
        self.nodes = 0

    def run(self, k: int) -> list[list[int]] | None:
        self.k = k
        self.found = None
        self._place(0, 1, 0)
        return self.found

    def _place(self, index: int, sheet: int, used: int) -> None:
        if sheet > self.fold:
            index, sheet = index + 1, 1
        if index == len(self.order):
            self.found = [row[:] for row in self.values]
            return
        v = self.order[index]
        limit = min(used + 1, self.k) if sheet == 1 else self.k
        for c in range(1, limit + 1):
            self.nodes += 1
            if any(self.values[u][i] == c for u, i in self.checks[v][sheet]):
                continue
            self.values[v][sheet] = c
            self._place(index, sheet + 1, max(used, c) if sheet == 1 else used)
            self.values[v][sheet] = 0
            if self.found is not None:
                return


@lru_cache(maxsize=256)
def _parent_optimum(g: Graph) -> Coloring:
    # Every subgraph of one parent shares this coloring.
    return optimal_coloring(g, name="relative-parent")


def _search_palette(
    h: SpanningSubgraph, directed: DirectedVoltages, fold: int, solver: str
) -> tuple[int, list[list[int]] | None, Coloring]:
    """
    Grow the palette from 2 while it stays below chi(G).

    Returns (k, values, optimal coloring of G); values is None when no
    smaller palette works and k = chi(G).
    """
    best = _parent_optimum(h.parent)
    chi_g = len(best.used_colors())
    search = _TupleSearch(h, directed, fold)
    try:
        for k in range(2, chi_g):
            values = search.run(k)
            if values is not None:
                return k, values, best
    finally:
        search_nodes_total.labels(solver=solver).inc(search.nodes)
    return chi_g, None, best


def _sheet_coloring(hg: Graph, values: list[list[int]], sheet: int, k: int) -> Coloring:
    colors = tuple(values[v][sheet] for v in range(hg.vertex_count))
    return Coloring(graph=hg, colors=colors, palette_size=k)


def _constant_coloring(hg: Graph) -> Coloring:
    n = hg.vertex_count
    return Coloring(graph=hg, colors=(1,) * n, palette_size=min(n, 1))


def compatible_pair_direct(h: SpanningSubgraph) -> CompatiblePair:
    """
    An optimal compatible pair by joint search over (f, g).

    The empty graph needs 0 colors and an edgeless G needs 1. Otherwise the
    palette grows from 2 and stops at chi(G), where f = g = an optimal
    coloring of G is always compatible.
    """
    hg = h.as_graph()
    if h.parent.edge_count == 0:
        ones = _constant_coloring(hg)
        return CompatiblePair.model_construct(subgraph=h, f=ones, g=ones)

    directed: DirectedVoltages = {}
    for u, v in h.parent.edges:
        p = (1, 2) if (u, v) in h.edges else (2, 1)
        directed[(u, v)] = directed[(v, u)] = p

    k, values, best = _search_palette(h, directed, 2, "relative-direct")
    if values is None:
        witness = best.on(hg)
        return CompatiblePair.model_construct(subgraph=h, f=witness, g=witness)
    return CompatiblePair.model_construct(
        subgraph=h, f=_sheet_coloring(hg, values, 1, k), g=_sheet_coloring(hg, values, 2, k)
    )


def chi_rel_direct(h: SpanningSubgraph) -> int:
    """chi_G(H): the least k admitting a compatible pair of proper k-colorings of H."""
    value = compatible_pair_direct(h).colors_used
    logger.debug(
        "relative chromatic number",
        method="direct",
        vertices=h.vertex_count,
        h_edges=len(h.edges),
        g_edges=h.parent.edge_count,
        value=value,
    )
    return value


def cover_coloring_from_pair(pair: CompatiblePair) -> Coloring:
    """h(v_1) = f(v), h(v_-1) = g(v) on the double cover of phi_H."""
    cover = derive_double_cover(signing_from_cosupport(pair.subgraph)).graph
    colors = [0] * cover.vertex_count
    for v in range(pair.subgraph.vertex_count):
        colors[double_cover_index(v, 1)] = pair.f[v]
        colors[double_cover_index(v, -1)] = pair.g[v]
    return Coloring(graph=cover, colors=tuple(colors), palette_size=pair.palette_size)


def compatible_pair_via_cover(h: SpanningSubgraph) -> CompatiblePair:
    """Split an optimal coloring of G^{phi_H} into f (sheet +1) and g (sheet -1)."""
    cover = derive_double_cover(signing_from_cosupport(h)).graph
    coloring = ChromaticSolver(cover, name="relative-cover").solve()
    hg = h.as_graph()
    k = coloring.palette_size
    f = tuple(coloring[double_cover_index(v, 1)] for v in range(h.vertex_count))
    g = tuple(coloring[double_cover_index(v, -1)] for v in range(h.vertex_count))
    return CompatiblePair(
        subgraph=h,
        f=Coloring(graph=hg, colors=f, palette_size=k),
        g=Coloring(graph=hg, colors=g, palette_size=k),
    )


def chi_rel_via_cover(h: SpanningSubgraph) -> int:
    """chi(G^{phi_H}) for the signing phi_H with cosupport H."""
    cover = derive_double_cover(signing_from_cosupport(h)).graph
    value = len(ChromaticSolver(cover, name="relative-cover").solve().used_colors())
    logger.debug(
        "relative chromatic number",
        method="cover",
        vertices=h.vertex_count,
        h_edges=len(h.edges),
        value=value,
    )
    return value


def compatible_tuple_via_cover(voltage: PermutationVoltage) -> CompatibleTuple:
    """Optimal n-tuple read off the derived graph: f_i(v) = color of (v, i)."""
    coloring = ChromaticSolver(derive_nfold_cover(voltage).graph, name="nfold-cover").solve()
    hg = voltage.cosupport().as_graph()
    n, k = voltage.fold, coloring.palette_size
    colorings = tuple(
        Coloring(
            graph=hg,
            colors=tuple(coloring[nfold_index(v, i, n)] for v in voltage.base.vertices()),
            palette_size=k,
        )
        for i in range(1, n + 1)
    )
    return CompatibleTuple(voltage=voltage, colorings=colorings)


def chi_rel_nfold(voltage: PermutationVoltage) -> int:
    """Least palette admitting a compatible n-tuple, via the derived graph."""
    cover = derive_nfold_cover(voltage).graph
    return len(ChromaticSolver(cover, name="nfold-cover").solve().used_colors())


def compatible_tuple_direct(voltage: PermutationVoltage) -> CompatibleTuple:
    """Direct n-tuple search, growing the palette from 2 up to chi(G)."""
    h = voltage.cosupport()
    hg = h.as_graph()
    fold = voltage.fold
    if voltage.base.edge_count == 0:
        ones = _constant_coloring(hg)
        return CompatibleTuple.model_construct(voltage=voltage, colorings=(ones,) * fold)

    k, values, best = _search_palette(h, voltage.directed(), fold, "nfold-direct")
    if values is None:
        colorings = (best.on(hg),) * fold
    else:
        colorings = tuple(_sheet_coloring(hg, values, i, k) for i in range(1, fold + 1))
    return CompatibleTuple.model_construct(voltage=voltage, colorings=colorings)


def chi_rel_nfold_direct(voltage: PermutationVoltage) -> int:
    used: set[int] = set()
    for c in compatible_tuple_direct(voltage).colorings:
        used |= c.used_colors()
    return len(used)
