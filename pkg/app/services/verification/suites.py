"""
Invariant suites run by `verify`.

Graphs up to EXHAUSTIVE_MAX_VERTICES are taken exhaustively from the atlas;
larger ones, up to the requested maximum, are drawn with the suite seed.
"""

import random
from collections.abc import Callable, Iterator

from app.core.config import settings
from app.core.errors import InapplicableClaimError
from app.logging import get_logger
from app.metrics import verify_failures_total
from app.models.enums import VerifySuite
from app.services.bounds import (
    BoundReport,
    characterize_chi2,
    check_bipartite_quotient,
    chi_rel_complete_multipartite,
    complete_components_bound,
    induced_union_bounds,
    quotient_coloring_bound,
    switching_class_bounds,
)
from app.services.chromatic import chi_rel_direct, chi_rel_via_cover
from app.services.graph_core import (
    Graph,
    SpanningSubgraph,
    complement_within,
    is_bipartite,
    quotient,
    union_of_induced,
)
from app.services.switching import (
    are_switching_equivalent,
    canonical_representative,
    class_representatives,
    seidel_switch,
)

from .corpus import (
    ATLAS_MAX_VERTICES,
    clique_in_complete,
    connected_graphs,
    describe,
    random_connected_graph,
    random_subset,
    set_partitions,
    spanning_subgraphs,
)
from .models import SuiteReport

logger = get_logger(__name__)

EXHAUSTIVE_MAX_VERTICES = 6

SuiteCheck = Callable[[SuiteReport, random.Random], None]


def _sampled_subgraphs(
    rng: random.Random, min_vertices: int, max_vertices: int, count: int
) -> Iterator[SpanningSubgraph]:
    for _ in range(count):
        g = random_connected_graph(rng, min_vertices, max_vertices)
        edges = frozenset(random_subset(rng, g.sorted_edges()))
        yield SpanningSubgraph.model_construct(parent=g, edges=edges)


def _subgraph_instances(max_vertices: int, rng: random.Random) -> Iterator[SpanningSubgraph]:
    for g in connected_graphs(min(max_vertices, EXHAUSTIVE_MAX_VERTICES)):
        yield from spanning_subgraphs(g)
    if max_vertices > EXHAUSTIVE_MAX_VERTICES:
        yield from _sampled_subgraphs(
            rng, EXHAUSTIVE_MAX_VERTICES + 1, max_vertices, settings.verify_samples
        )


def _check_bound(report: SuiteReport, instance: str, bound: BoundReport, value: int) -> None:
    if not bound.brackets(value):
        report.fail(instance, f"{bound.record()} misses chi_rel={value}")
    elif bound.witness is not None and bound.upper is not None:
        if bound.witness.colors_used > bound.upper:
            report.fail(
                instance,
                f"{bound.name} witness uses {bound.witness.colors_used} > upper {bound.upper}",
            )


def check_cover_equivalence(report: SuiteReport, rng: random.Random) -> None:
    """Direct pair search agrees with the chromatic number of the double cover."""
    for h in _subgraph_instances(report.max_vertices, rng):
        report.instances += 1
        direct, cover = chi_rel_direct(h), chi_rel_via_cover(h)
        if direct != cover:
            report.fail(describe(h), f"direct={direct} cover={cover}")


def check_switching_invariance(report: SuiteReport, rng: random.Random) -> None:
    """chi_G(H_X) = chi_G(H) for seeded random (G, H, X)."""
    upper = max(report.max_vertices, 2)
    for h in _sampled_subgraphs(rng, 2, upper, settings.verify_samples):
        report.instances += 1
        x = random_subset(rng, list(h.parent.vertices()))
        switched = seidel_switch(h, x)
        instance = f"{describe(h)} X={sorted(v + 1 for v in x)}"
        before, after = chi_rel_direct(h), chi_rel_direct(switched)
        if before != after:
            report.fail(instance, f"chi_rel(H)={before} chi_rel(H_X)={after}")
        if are_switching_equivalent(h, switched) is None:
            report.fail(instance, "switch not recognized as equivalent")
        if canonical_representative(h) != canonical_representative(switched):
            report.fail(instance, "canonical representatives differ")


def check_class_bounds(report: SuiteReport, rng: random.Random) -> None:
    """
    Switching-class bounds bracket chi_G(H).

    Exhaustive bounds depend only on the class, so one representative per
    class stands for all of its members.
    """
    for g in connected_graphs(min(report.max_vertices, EXHAUSTIVE_MAX_VERTICES)):
        for h in class_representatives(g):
            report.instances += 1
            _check_bound(report, describe(h), switching_class_bounds(h), chi_rel_direct(h))
    if report.max_vertices > EXHAUSTIVE_MAX_VERTICES:
        for h in _sampled_subgraphs(
            rng, EXHAUSTIVE_MAX_VERTICES + 1, report.max_vertices, settings.verify_samples
        ):
            report.instances += 1
            _check_bound(report, describe(h), switching_class_bounds(h), chi_rel_direct(h))


def check_two_characterization(report: SuiteReport, rng: random.Random) -> None:
    """chi_G(H) = 2 exactly when G is bipartite or H switches to the null subgraph."""
    for h in _subgraph_instances(report.max_vertices, rng):
        if h.parent.edge_count == 0:
            continue
        report.instances += 1
        claimed = characterize_chi2(h)
        value = chi_rel_direct(h)
        if claimed != (value == 2):
            report.fail(describe(h), f"characterized={claimed} chi_rel={value}")


def check_quotient_bound(report: SuiteReport, rng: random.Random) -> None:
    """The quotient-coloring bound is an upper bound, and is exact on cliques in K_n."""
    for h in _subgraph_instances(report.max_vertices, rng):
        report.instances += 1
        _check_bound(report, describe(h), quotient_coloring_bound(h), chi_rel_direct(h))
    for n in range(2, min(report.max_vertices, ATLAS_MAX_VERTICES) + 1):
        for m in range(2, n + 1):
            report.instances += 1
            h = clique_in_complete(n, m)
            value = chi_rel_direct(h)
            upper = quotient_coloring_bound(h).upper
            if value != m or upper != m:
                report.fail(f"K_{m - 1} in K_{n}", f"chi_rel={value} upper={upper} expected {m}")


def check_induced_union(report: SuiteReport, rng: random.Random) -> None:
    """Induced-union bounds, and chi(G) = chi_G(H) over a bipartite quotient."""
    for g in connected_graphs(min(report.max_vertices, EXHAUSTIVE_MAX_VERTICES)):
        for p in set_partitions(g.vertex_count):
            report.instances += 1
            h = union_of_induced(g, p)
            instance = f"{describe(h)} P={p.sorted_blocks()}"
            _check_bound(report, instance, induced_union_bounds(g, p), chi_rel_direct(h))
            if is_bipartite(quotient(g, p)) is not None:
                check = check_bipartite_quotient(g, p)
                if not check.holds:
                    report.fail(instance, f"bipartite quotient: {check.model_dump()}")


def _complete_component_cases(n: int) -> Iterator[tuple[SpanningSubgraph, int, int]]:
    """(H, number of parts, l_1 + l_2) for H a disjoint union of cliques spanning K_n."""
    k = Graph.complete(n)
    for p in set_partitions(n):
        sizes = sorted((len(b) for b in p.blocks), reverse=True)
        yield union_of_induced(k, p), len(p), sum(sizes[:2])


def check_complete_components(report: SuiteReport, rng: random.Random) -> None:
    """Cliques in K_n and their complements, complete multipartite subgraphs."""
    for n in range(1, min(report.max_vertices, ATLAS_MAX_VERTICES) + 1):
        for cliques, parts, expected in _complete_component_cases(n):
            report.instances += 1
            value = chi_rel_direct(cliques)
            bound = complete_components_bound(cliques)
            if value != expected or bound.lower != expected or bound.upper != expected:
                report.fail(describe(cliques), f"chi_rel={value} {bound.record()} expected {expected}")
            if parts < 2:
                continue
            multipartite = complement_within(cliques)
            report.instances += 1
            value = chi_rel_direct(multipartite)
            claimed = chi_rel_complete_multipartite(multipartite)
            if not value == claimed == parts:
                report.fail(describe(multipartite), f"chi_rel={value} claimed={claimed} parts={parts}")

    for g in connected_graphs(min(report.max_vertices, EXHAUSTIVE_MAX_VERTICES - 1)):
        for p in set_partitions(g.vertex_count):
            h = union_of_induced(g, p)
            try:
                bound = complete_components_bound(h)
            except InapplicableClaimError:
                continue
            report.instances += 1
            _check_bound(report, describe(h), bound, chi_rel_direct(h))


SUITES: dict[VerifySuite, SuiteCheck] = {
    VerifySuite.THM21: check_cover_equivalence,
    VerifySuite.COR23: check_switching_invariance,
    VerifySuite.COR24: check_class_bounds,
    VerifySuite.THM27: check_two_characterization,
    VerifySuite.THM31: check_quotient_bound,
    VerifySuite.THM34: check_induced_union,
    VerifySuite.COR36: check_complete_components,
}


def run_suite(suite: VerifySuite, max_vertices: int, seed: int | None = None) -> SuiteReport:
    seed = settings.seed if seed is None else seed
    report = SuiteReport(suite=suite, max_vertices=max_vertices, seed=seed)
    SUITES[suite](report, random.Random(seed))
    if report.counterexamples:
        verify_failures_total.labels(suite=suite.value).inc(len(report.counterexamples))
    logger.info(
        "suite finished",
        suite=suite.value,
        passed=report.passed,
        instances=report.instances,
        counterexamples=len(report.counterexamples),
    )
    return report
