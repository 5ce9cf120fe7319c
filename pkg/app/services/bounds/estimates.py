"""
Closed-form bounds on the relative chromatic number and the exact values
known for special families of subgraphs.

Enumerations over switching classes and quotient colorings are budgeted.
A truncated enumeration still yields sound bounds, since every candidate
examined gives one; the report's `exhaustive` flag says which case applies.
"""

import random
from collections.abc import Iterator, Sequence
from itertools import islice, product

from app.core.config import settings
from app.core.errors import (
    InapplicableClaimError,
    NotMultipartiteError,
    PreconditionError,
)
from app.logging import get_logger
from app.services.chromatic import (
    Coloring,
    chi_rel_direct,
    chromatic_number,
    is_k_colorable,
    iter_colorings,
    optimal_coloring,
)
from app.services.graph_core import (
    Graph,
    Partition,
    SpanningSubgraph,
    complement_within,
    complete_multipartite_parts,
    components,
    induced_subgraph,
    is_bipartite,
    is_connected,
    quotient,
    union_of_induced,
)
from app.services.switching import are_switching_equivalent, seidel_switch

from .models import (
    BipartiteQuotientCheck,
    BoundReport,
    QuotientColoringContext,
    RealizationResult,
    RespectfulColoring,
)
from .witnesses import (
    class_partner,
    constant_pair,
    mirrored_pair,
    shifted_partner,
    switch_pair,
)

logger = get_logger(__name__)


def delta_s(values: Sequence[int]) -> int:
    """max(0, 2 max(S) - sum(S)) for a nonempty multiset S."""
    if not values:
        raise PreconditionError("delta_S is undefined on the empty multiset")
    return max(0, 2 * max(values) - sum(values))


def independent_color_count(h: SpanningSubgraph, f: Coloring) -> int:
    """Nonempty color classes of f that are independent in the complement of H in G."""
    f.on(h.as_graph()).require_proper("f")
    dependent = {f[u] for u, v in h.outside_edges() if f[u] == f[v]}
    return len(f.used_colors() - dependent)


def _bounded(items: Iterator[Coloring], limit: int) -> tuple[list[Coloring], bool]:
    """At most `limit` items and whether more were available."""
    taken = list(islice(items, limit + 1))
    return taken[:limit], len(taken) > limit


def _switch_subsets(n: int, budget: int, rng: random.Random) -> tuple[list[frozenset[int]], bool]:
    """X subsets up to complement; all of them when 2^(n-1) fits the budget."""
    bits = max(n - 1, 0)
    if (1 << bits) <= budget:
        masks = range(1 << bits)
        exhaustive = True
    else:
        masks = sorted({0} | {rng.getrandbits(bits) for _ in range(budget - 1)})
        exhaustive = False
    return [frozenset(v for v in range(n) if m >> v & 1) for m in masks], exhaustive


def switching_class_bounds(
    h: SpanningSubgraph,
    class_budget: int | None = None,
    coloring_budget: int | None = None,
    seed: int | None = None,
) -> BoundReport:
    """
    Bounds over members K of the switching class of H.

    lower = max chi(K); upper = min(chi(G), 2 chi(K) - I_f) over K and over
    chi(K)-colorings f of K. The witness for a (K, f) candidate is built
    on K and carried back to H through the switch.
    """
    class_budget = settings.class_budget if class_budget is None else class_budget
    coloring_budget = settings.coloring_budget if coloring_budget is None else coloring_budget
    seed = settings.seed if seed is None else seed
    g = h.parent

    best_g = optimal_coloring(g, name="bounds")
    chi_g = len(best_g.used_colors())
    lower = 0
    upper = chi_g
    best: tuple[SpanningSubgraph, Coloring, frozenset[int]] | None = None
    evaluated = 0

    subsets, exhaustive = _switch_subsets(h.vertex_count, class_budget, random.Random(seed))
    seen: set[frozenset] = set()
    for x in subsets:
        k = seidel_switch(h, x)
        if k.edges in seen:
            continue
        seen.add(k.edges)
        kg = k.as_graph()
        chi_k = chromatic_number(kg, name="bounds")
        lower = max(lower, chi_k)
        colorings, truncated = _bounded(iter_colorings(kg, chi_k), coloring_budget)
        exhaustive = exhaustive and not truncated
        for f in colorings:
            evaluated += 1
            candidate = 2 * chi_k - independent_color_count(k, f)
            if candidate < upper:
                upper = candidate
                best = (k, f, x)

    if best is None:
        witness = constant_pair(h, best_g)
    else:
        k, f, x = best
        witness = switch_pair(class_partner(k, f), x, h)

    report = BoundReport(
        name="switching-class",
        lower=lower,
        upper=upper,
        exhaustive=exhaustive,
        seed=seed,
        witness=witness,
        evaluated=evaluated,
    )
    logger.debug("bound evaluated", record=report.record(), members=len(seen))
    return report


def _part_dependence(
    h: SpanningSubgraph, part_graph: Graph, mapping: dict[int, int], chi: int, budget: int
) -> tuple[dict[int, list[int]], bool]:
    """
    For one part: reachable D_f values, each with a local coloring attaining
    it, over at most `budget` chi-colorings of the part.
    """
    outside = [
        (mapping[u], mapping[v])
        for u, v in h.outside_edges()
        if u in mapping and v in mapping
    ]
    colorings, truncated = _bounded(iter_colorings(part_graph, chi), budget)
    reachable: dict[int, list[int]] = {}
    for c in colorings:
        dependent = len({c[u] for u, v in outside if c[u] == c[v]})
        reachable.setdefault(dependent, list(c.colors))
    return reachable, truncated


def _respectful_coloring(
    ctx: QuotientColoringContext, local_colors: list[tuple[list[int], dict[int, int]]]
) -> RespectfulColoring:
    """Give part i its own block of colors, after the blocks of parts 0..i-1."""
    colors = [0] * ctx.subgraph.vertex_count
    offset = 0
    for part, (local, mapping) in zip(ctx.parts, local_colors, strict=True):
        for v in part:
            colors[v] = offset + local[mapping[v]]
        offset += max(local, default=0)
    f = Coloring(graph=ctx.subgraph.as_graph(), colors=tuple(colors), palette_size=offset)
    return RespectfulColoring(context=ctx, f=f)


def quotient_coloring_bound(h: SpanningSubgraph, search_budget: int | None = None) -> BoundReport:
    """
    Upper bound from colorings c of H / P, P the components of the complement
    of H in G.

    For each c with parts H_c(i) of chromatic numbers chi_i, the bound is
    sum(chi_i) plus the smaller of delta_S(chi_i) and the least delta_S(D_f(i))
    over respectful colorings f.
    """
    budget = settings.search_budget if search_budget is None else search_budget
    if h.vertex_count == 0:
        return BoundReport(name="quotient", upper=0, seed=settings.seed)

    partition, q = QuotientColoringContext.complement_quotient(h)
    chi_q = chromatic_number(q, name="bounds")
    quotient_colorings, exhaustive = _bounded(iter_colorings(q, chi_q), budget)

    upper: int | None = None
    best: tuple[QuotientColoringContext, list, bool] | None = None
    evaluated = 0
    for c in quotient_colorings:
        ctx = QuotientColoringContext.build(h, partition, q, c)
        part_graphs = ctx.part_graphs()
        chis = [chromatic_number(pg, name="bounds") for pg, _ in part_graphs]
        base = sum(chis)

        reachable: list[dict[int, list[int]]] = []
        for (pg, mapping), chi in zip(part_graphs, chis, strict=True):
            found, truncated = _part_dependence(h, pg, mapping, chi, budget)
            exhaustive = exhaustive and not truncated
            reachable.append(found)

        all_dependent = base + delta_s(chis)
        choice = min(
            product(*(sorted(r) for r in reachable)), key=lambda ds: (delta_s(ds), ds)
        )
        evaluated += 1
        with_dependence = base + delta_s(choice)

        candidate = min(all_dependent, with_dependence)
        if upper is None or candidate < upper:
            upper = candidate
            locals_ = [
                (found[d], mapping)
                for found, d, (_, mapping) in zip(reachable, choice, part_graphs, strict=True)
            ]
            best = (ctx, locals_, all_dependent < with_dependence)

    assert best is not None
    ctx, locals_, use_all = best
    witness = shifted_partner(_respectful_coloring(ctx, locals_), all_dependent=use_all)
    report = BoundReport(
        name="quotient",
        upper=upper,
        exhaustive=exhaustive,
        seed=settings.seed,
        witness=witness,
        evaluated=evaluated,
    )
    logger.debug("bound evaluated", record=report.record(), quotient_colors=chi_q)
    return report


def quotient_upper_bound(h: SpanningSubgraph, search_budget: int | None = None) -> int:
    upper = quotient_coloring_bound(h, search_budget).upper
    assert upper is not None
    return upper


def _block_colorings(g: Graph, p: Partition) -> list[tuple[list[int], dict[int, int], int]]:
    result = []
    for block in p.blocks:
        sub, mapping = induced_subgraph(g, block)
        coloring = optimal_coloring(sub, name="bounds")
        result.append((list(coloring.colors), mapping, len(coloring.used_colors())))
    return result


def induced_union_bounds(g: Graph, p: Partition) -> BoundReport:
    """
    Bounds for H the disjoint union of the induced blocks G[V_i].

    Over pairs of blocks adjacent in G / P: lower is the largest
    chi(G[V_i + V_j]), upper the largest chi(G[V_i]) + chi(G[V_j]).
    Without cross edges H = G and both equal chi(H).
    """
    h = union_of_induced(g, p)
    q = quotient(g, p)
    blocks = _block_colorings(g, p)
    chis = [chi for _, _, chi in blocks]

    if q.edge_count == 0:
        chi_h = max(chis, default=0)
        witness = constant_pair(h, optimal_coloring(g, name="bounds")) if g.vertex_count else None
        return BoundReport(
            name="induced-union", lower=chi_h, upper=chi_h, seed=settings.seed, witness=witness
        )

    lower = 0
    pair_upper = 0
    for i, j in q.sorted_edges():
        union, _ = induced_subgraph(g, p.blocks[i] | p.blocks[j])
        lower = max(lower, chromatic_number(union, name="bounds"))
        pair_upper = max(pair_upper, chis[i] + chis[j])
    # Blocks with no cross edges still need their own colors.
    upper = max(pair_upper, max(chis))

    witness = mirrored_pair(h, p, [(local, mapping) for local, mapping, _ in blocks], upper)
    report = BoundReport(
        name="induced-union",
        lower=lower,
        upper=upper,
        seed=settings.seed,
        witness=witness,
        evaluated=q.edge_count,
    )
    logger.debug("bound evaluated", record=report.record(), blocks=len(p))
    return report


def check_bipartite_quotient(g: Graph, p: Partition) -> BipartiteQuotientCheck:
    """
    With G / P bipartite, chi(G) should equal chi_G(H) for H the union of the
    induced blocks, and sit between the induced-union bounds.
    """
    if is_bipartite(quotient(g, p)) is None:
        raise InapplicableClaimError("quotient graph is not bipartite")
    h = union_of_induced(g, p)
    sandwich = induced_union_bounds(g, p)
    assert sandwich.lower is not None and sandwich.upper is not None
    check = BipartiteQuotientCheck(
        chi=chromatic_number(g),
        chi_rel=chi_rel_direct(h),
        sandwich_lower=sandwich.lower,
        sandwich_upper=sandwich.upper,
    )
    if not check.holds:
        logger.warning("bipartite quotient claim failed", **check.model_dump())
    return check


def _require_connected_with_edge(g: Graph) -> None:
    if not is_connected(g) or g.edge_count == 0:
        raise PreconditionError("G must be connected with at least one edge")


def characterize_chi2(h: SpanningSubgraph) -> bool:
    """chi_G(H) = 2 iff G is bipartite or H switches to the null subgraph."""
    _require_connected_with_edge(h.parent)
    if is_bipartite(h.parent) is not None:
        return True
    return are_switching_equivalent(h, SpanningSubgraph.null(h.parent)) is not None


def _at_least(g: Graph, m: int) -> bool:
    return is_k_colorable(g, m - 1) is None


def _critical_subgraph(g: Graph, m: int) -> frozenset:
    """
    Edges of an m-critical subgraph: delete vertices, then edges, in index
    order whenever chi stays at least m.
    """
    keep = set(g.vertices())
    for v in g.vertices():
        sub, _ = induced_subgraph(g, keep - {v})
        if _at_least(sub, m):
            keep.discard(v)
    edges = {e for e in g.edges if e[0] in keep and e[1] in keep}
    for e in sorted(edges):
        trial = Graph.model_construct(vertex_count=g.vertex_count, edges=frozenset(edges - {e}))
        if _at_least(trial, m):
            edges.discard(e)
    return frozenset(edges)


def realize_chi_rel(g: Graph, m: int) -> RealizationResult:
    """
    A spanning subgraph H with chi_G(H) = m.

    First candidate: an m-critical subgraph padded with isolated vertices.
    Its value is checked by the direct search; if it misses m, edges of G
    are added one at a time to the null subgraph, which moves chi_G by at
    most one per edge, until m is reached.
    """
    if not is_connected(g):
        raise PreconditionError("G must be connected")
    chi_g = chromatic_number(g)
    if not 2 <= m <= chi_g:
        raise PreconditionError(f"m must lie in 2..{chi_g}, got {m}")

    critical = SpanningSubgraph.model_construct(parent=g, edges=_critical_subgraph(g, m))
    value = chi_rel_direct(critical)
    if value == m:
        return RealizationResult(
            subgraph=critical,
            target=m,
            value=value,
            method="critical",
            critical_claim_held=True,
            critical_value=value,
        )

    logger.warning(
        "critical subgraph missed target",
        target=m,
        value=value,
        edges=critical.sorted_edges(),
    )
    ordered = g.sorted_edges()
    for count in range(len(ordered) + 1):
        candidate = SpanningSubgraph.model_construct(parent=g, edges=frozenset(ordered[:count]))
        if chi_rel_direct(candidate) == m:
            return RealizationResult(
                subgraph=candidate,
                target=m,
                value=m,
                method="edge-walk",
                critical_claim_held=False,
                critical_value=value,
            )
    raise AssertionError("edge walk passes every value between 2 and chi(G)")


def chi_rel_complete_multipartite(h: SpanningSubgraph) -> int:
    """m for a complete m-partite spanning subgraph of K_n, without search."""
    n = h.vertex_count
    if h.parent.edge_count != n * (n - 1) // 2:
        raise NotMultipartiteError("parent graph must be complete")
    parts = complete_multipartite_parts(h.as_graph())
    if parts is None or len(parts) < 2:
        raise NotMultipartiteError("subgraph is not complete multipartite")
    return len(parts)


def _is_clique(g: Graph, block: frozenset[int]) -> bool:
    size = len(block)
    return sum(1 for u, v in g.edges if u in block and v in block) == size * (size - 1) // 2


def complete_components_bound(h: SpanningSubgraph) -> BoundReport:
    """
    Components H_1, H_2, ... sorted by descending chi, ties by lowest vertex.

    If the complement of H in G is complete multipartite with the components
    as parts, chi_G(H) = chi(H_1) + chi(H_2). If every component is complete,
    chi_G(H) <= chi(H_1) + chi(H_2), with equality in K_n.
    """
    if h.vertex_count == 0:
        raise PreconditionError("H has no vertices")
    hg = h.as_graph()
    comps = components(hg)
    chis = {
        block: chromatic_number(induced_subgraph(hg, block)[0], name="bounds")
        for block in comps.blocks
    }
    ordered = sorted(comps.blocks, key=lambda b: (-chis[b], min(b)))
    top = [chis[b] for b in ordered[:2]]
    pair_sum = sum(top)

    parts = complete_multipartite_parts(complement_within(h).as_graph())
    if len(comps) >= 2 and parts is not None and set(parts.blocks) == set(comps.blocks):
        return BoundReport(
            name="complete-components",
            lower=pair_sum,
            upper=pair_sum,
            seed=settings.seed,
            witness=induced_union_bounds(h.parent, comps).witness,
        )

    if all(_is_clique(hg, block) for block in comps.blocks):
        n = h.vertex_count
        complete_parent = h.parent.edge_count == n * (n - 1) // 2
        return BoundReport(
            name="complete-components",
            lower=pair_sum if complete_parent else top[0],
            upper=pair_sum,
            seed=settings.seed,
            witness=induced_union_bounds(h.parent, comps).witness,
        )

    raise InapplicableClaimError(
        "components are not complete and the complement is not complete multipartite over them"
    )
