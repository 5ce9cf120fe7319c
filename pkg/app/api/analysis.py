"""
Analysis endpoints.

Thin wrappers over AnalysisService: request models build the domain objects,
response models flatten the results into 0-based JSON.
"""

from fastapi import APIRouter, Depends, Request

from app.api.common import handle_service_errors
from app.core.config import Settings as AppSettings
from app.models.requests.analysis import (
    BoundsRequest,
    ChiRelRequest,
    ChiRequest,
    SigningCoverRequest,
    SwitchRequest,
    VoltageCoverRequest,
)
from app.models.responses.analysis import (
    BoundEntry,
    BoundsResponse,
    ChiRelResponse,
    ChiResponse,
    CoverResponse,
    PairResponse,
    SwitchResponse,
)
from app.services.analysis_service import AnalysisService
from app.services.chromatic import CompatiblePair
from app.services.covering import CoveringGraph, CoveringReport, PermutationVoltage, Signing
from app.services.graph_core import Graph, SpanningSubgraph, normalize_edge

router = APIRouter(tags=["analysis"])


def get_settings(request: Request) -> AppSettings:
    """Settings the app was built with."""
    return request.app.state.settings


def get_analysis_service(settings: AppSettings = Depends(get_settings)) -> AnalysisService:
    """Dependency injection for the analysis service"""
    return AnalysisService(settings=settings)


def _pair(pair: CompatiblePair | None) -> PairResponse | None:
    if pair is None:
        return None
    return PairResponse(f=list(pair.f.colors), g=list(pair.g.colors))


def _cover(cover: CoveringGraph, report: CoveringReport) -> CoverResponse:
    return CoverResponse(
        vertex_count=cover.graph.vertex_count,
        edges=cover.graph.sorted_edges(),
        fold=cover.fold,
        fiber=list(cover.fiber_label),
        valid=report.valid,
    )


@router.post("/chi", response_model=ChiResponse)
@handle_service_errors
def chi(request: ChiRequest, service: AnalysisService = Depends(get_analysis_service)):
    coloring = service.chromatic(request.graph.to_graph())
    return ChiResponse(
        chi=len(coloring.used_colors()),
        coloring=list(coloring.colors) if request.witness else None,
    )


@router.post("/chi-rel", response_model=ChiRelResponse)
@handle_service_errors
def chi_rel(request: ChiRelRequest, service: AnalysisService = Depends(get_analysis_service)):
    outcome = service.chi_rel(request.to_subgraph(), request.method)
    return ChiRelResponse(
        method=outcome.method,
        direct=outcome.direct,
        cover=outcome.cover,
        agree=outcome.agree,
        witness=_pair(outcome.pair),
    )


@router.post("/switch", response_model=SwitchResponse)
@handle_service_errors
def switch(request: SwitchRequest, service: AnalysisService = Depends(get_analysis_service)):
    g = request.graph.to_graph()
    witness = service.switch(
        SpanningSubgraph.of(g, request.h_edges), SpanningSubgraph.of(g, request.k_edges)
    )
    if witness is None:
        return SwitchResponse(equivalent=False)
    return SwitchResponse(equivalent=True, subset=witness.sorted_subset())


@router.post("/cover/signing", response_model=CoverResponse)
@handle_service_errors
def cover_from_signing(
    request: SigningCoverRequest, service: AnalysisService = Depends(get_analysis_service)
):
    g = request.graph.to_graph()
    negative = SpanningSubgraph.of(g, request.negative_edges)
    phi = Signing.model_construct(base=g, negative_edges=negative.edges)
    return _cover(*service.cover_from_signing(phi))


@router.post("/cover/voltage", response_model=CoverResponse)
@handle_service_errors
def cover_from_voltage(
    request: VoltageCoverRequest, service: AnalysisService = Depends(get_analysis_service)
):
    directed = {(item.u, item.v): tuple(item.perm) for item in request.voltages}
    base = Graph.from_edges(request.vertex_count, {normalize_edge(u, v) for u, v in directed})
    phi = PermutationVoltage.from_directed(base, request.fold, directed)
    return _cover(*service.cover_from_voltage(phi))


@router.post("/bounds", response_model=BoundsResponse)
@handle_service_errors
def bounds(
    request: BoundsRequest,
    exact: bool = False,
    seed: int | None = None,
    service: AnalysisService = Depends(get_analysis_service),
):
    g = request.graph.to_graph()
    h = SpanningSubgraph.of(g, request.subgraph_edges)
    reports = service.bounds(h, request.to_partition(g.vertex_count), seed=seed)
    entries = [
        BoundEntry(
            name=r.name,
            lower=r.lower,
            upper=r.upper,
            exhaustive=r.exhaustive,
            seed=r.seed,
            record=r.record(),
            witness=_pair(r.witness),
        )
        for r in reports
    ]
    return BoundsResponse(chi_rel=service.chi_rel_exact(h) if exact else None, bounds=entries)
