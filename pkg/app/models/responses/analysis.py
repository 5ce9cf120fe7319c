"""
Response models for the analysis endpoints.
"""

from pydantic import BaseModel, Field

from app.models.enums import ChiRelMethod


class ChiResponse(BaseModel):
    chi: int
    coloring: list[int] | None = Field(None, description="Color of each vertex, 1-based colors")


class PairResponse(BaseModel):
    f: list[int]
    g: list[int]


class ChiRelResponse(BaseModel):
    method: ChiRelMethod
    direct: int | None = None
    cover: int | None = None
    agree: bool = True
    witness: PairResponse | None = None


class CoverResponse(BaseModel):
    vertex_count: int
    edges: list[tuple[int, int]]
    fold: int
    fiber: list[tuple[int, int]] = Field(description="(base vertex, 1-based sheet) per cover vertex")
    valid: bool


class SwitchResponse(BaseModel):
    equivalent: bool
    subset: list[int] | None = None


class BoundEntry(BaseModel):
    name: str
    lower: int | None
    upper: int | None
    exhaustive: bool
    seed: int | None
    record: str
    witness: PairResponse | None = None


class BoundsResponse(BaseModel):
    chi_rel: int | None = Field(None, description="Exact value when requested")
    bounds: list[BoundEntry]
