from pydantic import BaseModel, ConfigDict, model_validator

from app.services.graph_core import SpanningSubgraph


class SwitchWitness(BaseModel):
    """A vertex set X with source_X == target."""

    model_config = ConfigDict(frozen=True)

    source: SpanningSubgraph
    target: SpanningSubgraph
    subset: frozenset[int]

    @model_validator(mode="after")
    def check_switch(self) -> "SwitchWitness":
        # Import here to avoid circular imports
        from .operations import seidel_switch

        if seidel_switch(self.source, self.subset) != self.target:
            raise ValueError("switching the source by subset does not give the target")
        return self

    def sorted_subset(self) -> list[int]:
        return sorted(self.subset)
