from collections.abc import Iterable, Mapping

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.errors import SubgraphMismatchError, VoltageError
from app.services.graph_core import Edge, Graph, SpanningSubgraph, normalize_edge

from . import permutations as perm
from .permutations import Permutation


class Signing(BaseModel):
    """
    Z2 voltage assignment on the edges of `base`.

    Stored as the set of edges signed -1; every other edge of `base` is +1.
    """

    model_config = ConfigDict(frozen=True)

    base: Graph
    negative_edges: frozenset[Edge] = Field(default_factory=frozenset)

    @field_validator("negative_edges")
    @classmethod
    def normalize_edges(cls, v: frozenset[Edge]) -> frozenset[Edge]:
        return frozenset(normalize_edge(a, b) for a, b in v)

    @model_validator(mode="after")
    def check_domain(self) -> "Signing":
        extra = self.negative_edges - self.base.edges
        if extra:
            raise ValueError(f"signed edge {min(extra)} is not an edge of the base")
        return self

    @classmethod
    def from_signs(cls, base: Graph, signs: Mapping[Edge, int]) -> "Signing":
        """Every edge of `base` must receive exactly one sign in {+1, -1}."""
        normalized: dict[Edge, int] = {}
        for (u, v), s in signs.items():
            e = normalize_edge(u, v)
            if s not in (1, -1):
                raise VoltageError(f"sign of edge {e} must be +1 or -1, got {s}")
            if e in normalized and normalized[e] != s:
                raise VoltageError(f"edge {e} is signed twice with different signs")
            normalized[e] = s
        if set(normalized) != set(base.edges):
            missing = sorted(base.edges - set(normalized))
            extra = sorted(set(normalized) - base.edges)
            raise SubgraphMismatchError(
                f"signing domain differs from E(G): missing={missing} extra={extra}"
            )
        negative = frozenset(e for e, s in normalized.items() if s == -1)
        return cls.model_construct(base=base, negative_edges=negative)

    @classmethod
    def all_positive(cls, base: Graph) -> "Signing":
        return cls.model_construct(base=base, negative_edges=frozenset())

    @classmethod
    def all_negative(cls, base: Graph) -> "Signing":
        return cls.model_construct(base=base, negative_edges=base.edges)

    def sign(self, u: int, v: int) -> int:
        return -1 if normalize_edge(u, v) in self.negative_edges else 1

    def signs(self) -> dict[Edge, int]:
        return {e: self.sign(*e) for e in self.base.sorted_edges()}

    def support(self) -> SpanningSubgraph:
        """Edges signed -1."""
        return SpanningSubgraph.model_construct(parent=self.base, edges=self.negative_edges)

    def cosupport(self) -> SpanningSubgraph:
        """Edges signed +1."""
        return SpanningSubgraph.model_construct(
            parent=self.base, edges=self.base.edges - self.negative_edges
        )


class PermutationVoltage(BaseModel):
    """
    Permutation voltage assignment of fold n.

    `assign` holds one permutation per edge for the (min -> max) orientation,
    sorted by edge; the reverse orientation carries the inverse.
    """

    model_config = ConfigDict(frozen=True)

    base: Graph
    fold: int = Field(ge=1)
    assign: tuple[tuple[Edge, Permutation], ...]

    @model_validator(mode="after")
    def check_assignment(self) -> "PermutationVoltage":
        problem = _assignment_problem(self.base, self.fold, self.assign)
        if problem:
            raise ValueError(problem)
        return self

    @classmethod
    def from_canonical(
        cls, base: Graph, fold: int, voltages: Mapping[Edge, Iterable[int]]
    ) -> "PermutationVoltage":
        """Voltages keyed by (min, max) edges."""
        if fold < 1:
            raise VoltageError(f"fold must be positive, got {fold}")
        assign = tuple(
            sorted((normalize_edge(*e), tuple(p)) for e, p in voltages.items())
        )
        problem = _assignment_problem(base, fold, assign)
        if problem:
            raise VoltageError(problem)
        return cls.model_construct(base=base, fold=fold, assign=assign)

    @classmethod
    def from_directed(
        cls, base: Graph, fold: int, voltages: Mapping[tuple[int, int], Iterable[int]]
    ) -> "PermutationVoltage":
        """
        Voltages keyed by directed edges (u, v).

        When both orientations of an edge are present they must be mutually
        inverse; a lone (max -> min) entry is inverted onto (min -> max).
        """
        canonical: dict[Edge, Permutation] = {}
        for (u, v), p in voltages.items():
            p = tuple(p)
            if not perm.is_permutation(p, fold):
                raise VoltageError(
                    f"voltage on ({u}, {v}) is not a permutation of 1..{fold}: {p}"
                )
            e = normalize_edge(u, v)
            forward = p if u < v else perm.inverse(p)
            if e in canonical and canonical[e] != forward:
                raise VoltageError(
                    f"voltages on ({e[0]}, {e[1]}) and ({e[1]}, {e[0]}) are not inverse"
                )
            canonical[e] = forward
        return cls.from_canonical(base, fold, canonical)

    @classmethod
    def identity(cls, base: Graph, fold: int) -> "PermutationVoltage":
        ident = perm.identity(fold)
        return cls.from_canonical(base, fold, {e: ident for e in base.edges})

    @classmethod
    def from_signing(cls, signing: Signing) -> "PermutationVoltage":
        """Fold-2 encoding: +1 -> identity, -1 -> the transposition (1 2)."""
        return cls.from_canonical(
            signing.base,
            2,
            {e: (2, 1) if s == -1 else (1, 2) for e, s in signing.signs().items()},
        )

    def canonical(self) -> dict[Edge, Permutation]:
        return dict(self.assign)

    def voltage(self, u: int, v: int) -> Permutation:
        """Permutation carried by the directed edge u -> v."""
        p = self.canonical()[normalize_edge(u, v)]
        return p if u < v else perm.inverse(p)

    def directed(self) -> dict[tuple[int, int], Permutation]:
        """Both orientations of every edge."""
        result: dict[tuple[int, int], Permutation] = {}
        for (u, v), p in self.assign:
            result[(u, v)] = p
            result[(v, u)] = perm.inverse(p)
        return result

    def cosupport(self) -> SpanningSubgraph:
        """Edges carrying the identity permutation."""
        return SpanningSubgraph.model_construct(
            parent=self.base,
            edges=frozenset(e for e, p in self.assign if perm.is_identity(p)),
        )


def _assignment_problem(
    base: Graph, fold: int, assign: tuple[tuple[Edge, Permutation], ...]
) -> str | None:
    seen: set[Edge] = set()
    for e, p in assign:
        if e in seen:
            return f"edge {e} has two voltages"
        if e not in base.edges:
            return f"voltage on {e}, which is not an edge of the base"
        if not perm.is_permutation(p, fold):
            return f"voltage on {e} is not a permutation of 1..{fold}: {p}"
        seen.add(e)
    if seen != base.edges:
        return f"edge {min(base.edges - seen)} has no voltage"
    return None


class CoveringGraph(BaseModel):
    """
    A graph together with its fiber labels over a base graph.

    Only labels are validated here; the covering property itself is what
    `verify_covering` decides.
    """

    model_config = ConfigDict(frozen=True)

    graph: Graph
    base: Graph
    fold: int = Field(ge=1)
    fiber_label: tuple[tuple[int, int], ...] = Field(
        description="fiber_label[x] = (base vertex, 1-based sheet) of covering vertex x"
    )

    @model_validator(mode="after")
    def check_labels(self) -> "CoveringGraph":
        if len(self.fiber_label) != self.graph.vertex_count:
            raise ValueError("every covering vertex needs exactly one fiber label")
        for x, (v, sheet) in enumerate(self.fiber_label):
            if not 0 <= v < self.base.vertex_count:
                raise ValueError(f"covering vertex {x} projects outside the base")
            if not 1 <= sheet <= self.fold:
                raise ValueError(f"covering vertex {x} has sheet {sheet} > fold")
        return self

    def projection(self) -> list[int]:
        return [v for v, _ in self.fiber_label]

    def vertex_of(self, v: int, sheet: int) -> int:
        return self.fiber_label.index((v, sheet))


class CoveringReport(BaseModel):
    valid: bool
    violating_vertex: int | None = None
    flagged: tuple[int, ...] = ()
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid
