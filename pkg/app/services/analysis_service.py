"""
Service layer shared by the command line and the HTTP API.

Takes domain objects, returns domain results; parsing and rendering stay in
the adapters and the API models.
"""

from pydantic import BaseModel

from app.core.config import Settings
from app.core.config import settings as app_settings
from app.core.errors import InapplicableClaimError, PartitionError
from app.logging import get_logger
from app.models.enums import ChiRelMethod, VerifySuite
from app.services.bounds import (
    BoundReport,
    RealizationResult,
    complete_components_bound,
    induced_union_bounds,
    quotient_coloring_bound,
    realize_chi_rel,
    switching_class_bounds,
)
from app.services.chromatic import (
    ChromaticSolver,
    Coloring,
    CompatiblePair,
    chi_rel_direct,
    compatible_pair_direct,
    compatible_pair_via_cover,
)
from app.services.covering import (
    CoveringGraph,
    CoveringReport,
    PermutationVoltage,
    Signing,
    derive_double_cover,
    derive_nfold_cover,
    verify_covering,
)
from app.services.graph_core import (
    Graph,
    Partition,
    SpanningSubgraph,
    components,
    union_of_induced,
)
from app.services.switching import (
    SwitchWitness,
    are_switching_equivalent,
    enumerate_switching_class,
)
from app.services.verification import SuiteReport, run_suite

logger = get_logger(__name__)


class ChiRelOutcome(BaseModel):
    method: ChiRelMethod
    direct: int | None = None
    cover: int | None = None
    pair: CompatiblePair | None = None

    @property
    def agree(self) -> bool:
        return self.direct is None or self.cover is None or self.direct == self.cover

    @property
    def value(self) -> int:
        value = self.direct if self.direct is not None else self.cover
        assert value is not None
        return value


class AnalysisService:
    """Chromatic, covering, switching and bound computations behind one facade."""

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or app_settings

    def chromatic(self, g: Graph) -> Coloring:
        return ChromaticSolver(
            g,
            vertex_limit=self.settings.exact_vertex_limit,
            allow_large=self.settings.allow_large,
        ).solve()

    def chi_rel(self, h: SpanningSubgraph, method: ChiRelMethod) -> ChiRelOutcome:
        outcome = ChiRelOutcome(method=method)
        if method in (ChiRelMethod.DIRECT, ChiRelMethod.BOTH):
            pair = compatible_pair_direct(h)
            outcome.direct = pair.colors_used
            outcome.pair = pair
        if method in (ChiRelMethod.COVER, ChiRelMethod.BOTH):
            pair = compatible_pair_via_cover(h)
            outcome.cover = pair.colors_used
            outcome.pair = outcome.pair or pair
        if not outcome.agree:
            logger.error(
                "direct and cover values disagree",
                direct=outcome.direct,
                cover=outcome.cover,
                h_edges=h.sorted_edges(),
            )
        return outcome

    def cover_from_signing(self, phi: Signing) -> tuple[CoveringGraph, CoveringReport]:
        cover = derive_double_cover(phi)
        return cover, verify_covering(cover)

    def cover_from_voltage(self, phi: PermutationVoltage) -> tuple[CoveringGraph, CoveringReport]:
        cover = derive_nfold_cover(phi)
        return cover, verify_covering(cover)

    def switch(self, h: SpanningSubgraph, k: SpanningSubgraph) -> SwitchWitness | None:
        return are_switching_equivalent(h, k)

    def switch_class(self, h: SpanningSubgraph) -> list[SpanningSubgraph]:
        return enumerate_switching_class(h, self.settings.switching_class_limit)

    def bounds(
        self,
        h: SpanningSubgraph,
        partition: Partition | None = None,
        seed: int | None = None,
    ) -> list[BoundReport]:
        """
        Every bound that applies to H.

        The induced-union bounds need H to be the union of the induced blocks
        of `partition`; without a partition H's own components are tried.
        """
        seed = self.settings.seed if seed is None else seed
        reports = [
            switching_class_bounds(
                h,
                class_budget=self.settings.class_budget,
                coloring_budget=self.settings.coloring_budget,
                seed=seed,
            ),
            quotient_coloring_bound(h, self.settings.search_budget),
        ]

        blocks = partition or components(h.as_graph())
        induced = union_of_induced(h.parent, blocks)
        if induced.edges == h.edges:
            reports.append(induced_union_bounds(h.parent, blocks))
        elif partition is not None:
            raise PartitionError("H is not the union of the subgraphs induced by the partition")

        try:
            reports.append(complete_components_bound(h))
        except InapplicableClaimError:
            logger.debug("complete components bound does not apply")
        return reports

    def chi_rel_exact(self, h: SpanningSubgraph) -> int:
        return chi_rel_direct(h)

    def realize(self, g: Graph, m: int) -> RealizationResult:
        return realize_chi_rel(g, m)

    def verify(self, suite: VerifySuite, max_vertices: int, seed: int | None = None) -> SuiteReport:
        return run_suite(suite, max_vertices, seed)
