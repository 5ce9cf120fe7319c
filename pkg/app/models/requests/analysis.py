"""
Request models for the analysis endpoints.

Vertices are 0-based in JSON payloads; the file formats used by the command
line are 1-based.
"""

from pydantic import BaseModel, Field, field_validator

from app.models.enums import DEFAULT_CHI_REL_METHOD, ChiRelMethod
from app.services.graph_core import Graph, Partition, SpanningSubgraph

EdgeList = list[tuple[int, int]]


class GraphPayload(BaseModel):
    vertex_count: int = Field(..., ge=0, le=512, description="Number of vertices")
    edges: EdgeList = Field(default_factory=list, description="Undirected edges, 0-based")

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.vertex_count, self.edges)


class ChiRequest(BaseModel):
    graph: GraphPayload
    witness: bool = Field(True, description="Include an optimal coloring")


class ChiRelRequest(BaseModel):
    graph: GraphPayload
    subgraph_edges: EdgeList = Field(default_factory=list, description="Edges of H")
    method: ChiRelMethod = Field(DEFAULT_CHI_REL_METHOD, description="direct | cover | both")

    def to_subgraph(self) -> SpanningSubgraph:
        return SpanningSubgraph.of(self.graph.to_graph(), self.subgraph_edges)


class SwitchRequest(BaseModel):
    graph: GraphPayload
    h_edges: EdgeList = Field(default_factory=list)
    k_edges: EdgeList = Field(default_factory=list)


class SigningCoverRequest(BaseModel):
    graph: GraphPayload
    negative_edges: EdgeList = Field(default_factory=list, description="Edges signed -1")


class DirectedVoltage(BaseModel):
    u: int = Field(..., ge=0)
    v: int = Field(..., ge=0)
    perm: list[int] = Field(..., min_length=1, description="One-line image of 1..fold")


class VoltageCoverRequest(BaseModel):
    vertex_count: int = Field(..., ge=0, le=512)
    fold: int = Field(..., ge=1, le=16)
    voltages: list[DirectedVoltage]

    @field_validator("voltages")
    @classmethod
    def validate_voltages(cls, v: list[DirectedVoltage]) -> list[DirectedVoltage]:
        if not v:
            raise ValueError("At least one edge voltage is required")
        return v


class BoundsRequest(BaseModel):
    graph: GraphPayload
    subgraph_edges: EdgeList = Field(default_factory=list)
    partition: list[list[int]] | None = Field(
        None, description="Blocks V_i for the induced-union bounds; defaults to H's components"
    )

    def to_partition(self, vertex_count: int) -> Partition | None:
        if self.partition is None:
            return None
        return Partition.from_blocks(vertex_count, self.partition)
