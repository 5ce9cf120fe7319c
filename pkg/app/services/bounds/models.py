from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.services.chromatic import Coloring, CompatiblePair, chromatic_number
from app.services.graph_core import (
    Graph,
    Partition,
    SpanningSubgraph,
    complement_within,
    components,
    induced_subgraph,
    quotient,
)


class BoundReport(BaseModel):
    """One evaluated bound on chi_G(H), with the pair that realizes `upper` if known."""

    name: str
    lower: int | None = None
    upper: int | None = None
    exhaustive: bool = True
    seed: int | None = None
    witness: CompatiblePair | None = None
    evaluated: int = Field(default=0, description="Candidates examined")

    def record(self) -> str:
        def fmt(value: int | None) -> str:
            return "-" if value is None else str(value)

        return (
            f"bound {self.name} lower={fmt(self.lower)} upper={fmt(self.upper)} "
            f"exhaustive={'y' if self.exhaustive else 'n'} seed={fmt(self.seed)}"
        )

    def brackets(self, value: int) -> bool:
        return (self.lower is None or self.lower <= value) and (
            self.upper is None or value <= self.upper
        )


class QuotientColoringContext(BaseModel):
    """
    A coloring c of H / P, where P groups the vertices by components of the
    complement of H in G, and the parts H_c(i) = H[c^-1(i)] it induces on V(G).
    """

    model_config = ConfigDict(frozen=True)

    subgraph: SpanningSubgraph
    complement_partition: Partition
    quotient: Graph
    c: Coloring
    parts: tuple[frozenset[int], ...]

    @model_validator(mode="after")
    def check_context(self) -> "QuotientColoringContext":
        if self.c.graph != self.quotient:
            raise ValueError("c must color the quotient graph")
        if not self.c.is_proper():
            raise ValueError("c is not proper on the quotient graph")
        covered = sorted(v for part in self.parts for v in part)
        if covered != list(range(self.subgraph.vertex_count)):
            raise ValueError("parts must partition V(G)")
        return self

    @classmethod
    def complement_quotient(cls, h: SpanningSubgraph) -> tuple[Partition, Graph]:
        partition = components(complement_within(h).as_graph())
        return partition, quotient(h.as_graph(), partition)

    @classmethod
    def build(
        cls, h: SpanningSubgraph, partition: Partition, q: Graph, c: Coloring
    ) -> "QuotientColoringContext":
        grouped: dict[int, set[int]] = {}
        for block, color in zip(partition.blocks, c.colors, strict=True):
            grouped.setdefault(color, set()).update(block)
        parts = tuple(frozenset(grouped[color]) for color in sorted(grouped))
        return cls(subgraph=h, complement_partition=partition, quotient=q, c=c, parts=parts)

    def part_graphs(self) -> list[tuple[Graph, dict[int, int]]]:
        hg = self.subgraph.as_graph()
        return [induced_subgraph(hg, part) for part in self.parts]


class RespectfulColoring(BaseModel):
    """
    A coloring f of H using exactly chi(H_c(i)) colors on each part, with
    pairwise disjoint color sets across parts.
    """

    model_config = ConfigDict(frozen=True)

    context: QuotientColoringContext
    f: Coloring

    @model_validator(mode="after")
    def check_respects(self) -> "RespectfulColoring":
        if not self.f.on(self.context.subgraph.as_graph()).is_proper():
            raise ValueError("f is not proper on H")
        seen: set[int] = set()
        for part, (graph, _) in zip(self.context.parts, self.context.part_graphs(), strict=True):
            used = {self.f[v] for v in part}
            if len(used) != chromatic_number(graph):
                raise ValueError("f uses more colors on a part than its chromatic number")
            if used & seen:
                raise ValueError("two parts share a color")
            seen |= used
        return self

    def dependent_colors(self) -> set[int]:
        """Colors whose class contains an edge of the complement of H."""
        outside = self.context.subgraph.outside_edges()
        return {self.f[u] for u, v in outside if self.f[u] == self.f[v]}

    def independent_counts(self) -> list[int]:
        """I_f(i): colors on part i whose class is independent in the complement of H."""
        dependent = self.dependent_colors()
        return [
            len({self.f[v] for v in part} - dependent) for part in self.context.parts
        ]

    def dependent_counts(self) -> list[int]:
        """D_f(i) = chi(H_c(i)) - I_f(i)."""
        return [
            len({self.f[v] for v in part}) - independent
            for part, independent in zip(
                self.context.parts, self.independent_counts(), strict=True
            )
        ]


class BipartiteQuotientCheck(BaseModel):
    """chi(G) against chi_G(H) for H the union of induced blocks over a bipartite quotient."""

    chi: int
    chi_rel: int
    sandwich_lower: int
    sandwich_upper: int

    @property
    def equality_holds(self) -> bool:
        return self.chi == self.chi_rel

    @property
    def sandwich_holds(self) -> bool:
        return self.sandwich_lower <= self.chi <= self.sandwich_upper

    @property
    def holds(self) -> bool:
        return self.equality_holds and self.sandwich_holds


class RealizationResult(BaseModel):
    """A spanning subgraph with chi_G(H) = target, and how it was found."""

    subgraph: SpanningSubgraph
    target: int
    value: int
    method: str = Field(description="critical | edge-walk")
    critical_claim_held: bool
    critical_value: int
