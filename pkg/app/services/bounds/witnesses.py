"""
Explicit compatible pairs behind each upper bound.

Every constructor returns a validated CompatiblePair, so a bound that
reports a witness has been checked against the compatibility predicate.
"""

from collections.abc import Iterable

from app.services.chromatic import Coloring, CompatiblePair
from app.services.graph_core import Graph, Partition, SpanningSubgraph

from .models import RespectfulColoring


def class_partner(k: SpanningSubgraph, f: Coloring) -> CompatiblePair:
    """
    Pair (f, g) for K from a coloring f with colors 1..c: g keeps the color of
    every class independent in the complement of K and lifts the others by c.
    """
    c = f.palette_size
    outside = k.outside_edges()
    dependent = {f[u] for u, v in outside if f[u] == f[v]}
    kg = k.as_graph()
    g = tuple(color + c if color in dependent else color for color in f.colors)
    palette = max(c, max(g, default=0))
    return CompatiblePair(
        subgraph=k,
        f=Coloring(graph=kg, colors=f.colors, palette_size=palette),
        g=Coloring(graph=kg, colors=g, palette_size=palette),
    )


def constant_pair(h: SpanningSubgraph, coloring: Coloring) -> CompatiblePair:
    """f = g = a proper coloring of G; compatible for every H."""
    hg = h.as_graph()
    on_h = coloring.on(hg)
    return CompatiblePair(subgraph=h, f=on_h, g=on_h)


def switch_pair(pair: CompatiblePair, subset: Iterable[int], target: SpanningSubgraph) -> CompatiblePair:
    """
    Carry a pair for K to H where K = H_X: swap f and g on X.
    """
    x = frozenset(subset)
    tg = target.as_graph()
    f = tuple(pair.g[v] if v in x else pair.f[v] for v in range(target.vertex_count))
    g = tuple(pair.f[v] if v in x else pair.g[v] for v in range(target.vertex_count))
    palette = pair.palette_size
    return CompatiblePair(
        subgraph=target,
        f=Coloring(graph=tg, colors=f, palette_size=palette),
        g=Coloring(graph=tg, colors=g, palette_size=palette),
    )


def shifted_partner(respectful: RespectfulColoring, all_dependent: bool = False) -> CompatiblePair:
    """
    Partner g for a respectful f.

    Independent colors are kept. Dependent colors, grouped by part with the
    largest group first and followed by just enough fresh colors, are rotated
    by the size of the largest group, so no part receives one of its own
    colors back.
    """
    ctx = respectful.context
    f = respectful.f
    dependent = (
        f.used_colors() if all_dependent else respectful.dependent_colors()
    )
    groups = [
        sorted({f[v] for v in part} & dependent) for part in ctx.parts
    ]
    groups.sort(key=len, reverse=True)
    total = sum(len(group) for group in groups)
    largest = len(groups[0]) if groups else 0
    fresh = max(0, 2 * largest - total)
    top = max(f.colors, default=0)
    pool = [color for group in groups for color in group]
    pool += list(range(top + 1, top + fresh + 1))

    shift: dict[int, int] = {}
    if pool:
        size = len(pool)
        for pos, color in enumerate(pool[:total]):
            shift[color] = pool[(pos - largest) % size]
    g = tuple(shift.get(color, color) for color in f.colors)

    hg = ctx.subgraph.as_graph()
    palette = max(top, max(g, default=0))
    return CompatiblePair(
        subgraph=ctx.subgraph,
        f=Coloring(graph=hg, colors=f.colors, palette_size=palette),
        g=Coloring(graph=hg, colors=g, palette_size=palette),
    )


def mirrored_pair(
    h: SpanningSubgraph, p: Partition, block_colorings: list[tuple[list[int], dict[int, int]]], palette: int
) -> CompatiblePair:
    """
    f colors each block G[V_i] optimally with 1..chi_i and g = palette + 1 - f.

    `block_colorings[i]` is (local colors, original -> local index) for block i.
    """
    colors = [0] * h.vertex_count
    for block, (local, mapping) in zip(p.blocks, block_colorings, strict=True):
        for v in block:
            colors[v] = local[mapping[v]]
    hg: Graph = h.as_graph()
    f = tuple(colors)
    g = tuple(palette + 1 - c for c in f)
    return CompatiblePair(
        subgraph=h,
        f=Coloring(graph=hg, colors=f, palette_size=palette),
        g=Coloring(graph=hg, colors=g, palette_size=palette),
    )
