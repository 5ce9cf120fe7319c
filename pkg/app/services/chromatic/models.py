from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.errors import ImproperColoringError
from app.services.covering import PermutationVoltage
from app.services.covering import permutations as perm
from app.services.graph_core import Edge, Graph, SpanningSubgraph


class Coloring(BaseModel):
    """Total map vertex -> color in 1..palette_size, checked against `graph`."""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    colors: tuple[int, ...]
    palette_size: int = Field(ge=0)

    @model_validator(mode="after")
    def check_total(self) -> "Coloring":
        if len(self.colors) != self.graph.vertex_count:
            raise ValueError(
                f"{len(self.colors)} colors for {self.graph.vertex_count} vertices"
            )
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.palette_size:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.palette_size}")
        return self

    @classmethod
    def of(cls, graph: Graph, colors: Iterable[int], palette_size: int | None = None) -> "Coloring":
        values = tuple(int(c) for c in colors)
        size = palette_size if palette_size is not None else max(values, default=0)
        return cls(graph=graph, colors=values, palette_size=size)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def first_conflict(self) -> Edge | None:
        for u, v in self.graph.sorted_edges():
            if self.colors[u] == self.colors[v]:
                return (u, v)
        return None

    def is_proper(self) -> bool:
        return self.first_conflict() is None

    def require_proper(self, label: str = "coloring") -> None:
        conflict = self.first_conflict()
        if conflict is not None:
            raise ImproperColoringError(
                f"{label} is not proper: edge {conflict} is monochromatic"
            )

    def used_colors(self) -> set[int]:
        return set(self.colors)

    def color_classes(self) -> dict[int, frozenset[int]]:
        """Nonempty classes only."""
        classes: dict[int, set[int]] = {}
        for v, c in enumerate(self.colors):
            classes.setdefault(c, set()).add(v)
        return {c: frozenset(vs) for c, vs in sorted(classes.items())}

    def on(self, graph: Graph) -> "Coloring":
        """The same color map, checked against another graph on the same vertices."""
        return Coloring(graph=graph, colors=self.colors, palette_size=self.palette_size)


class CompatibilityReport(BaseModel):
    compatible: bool
    edge: Edge | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.compatible


def _pair_problem(subgraph: SpanningSubgraph, f: Coloring, g: Coloring) -> str | None:
    for label, c in (("f", f), ("g", g)):
        if c.graph.vertex_count != subgraph.vertex_count:
            return f"{label} colors {c.graph.vertex_count} vertices, H has {subgraph.vertex_count}"
        for u, v in subgraph.sorted_edges():
            if c[u] == c[v]:
                return f"{label} is not proper on H: edge {(u, v)} is monochromatic"
    for u, v in subgraph.outside_edges():
        if f[u] == g[v] or f[v] == g[u]:
            return f"edge {(u, v)} of G - H violates compatibility"
    return None


class CompatiblePair(BaseModel):
    """Proper colorings f, g of H with f(u) != g(v), f(v) != g(u) on every edge of G - H."""

    model_config = ConfigDict(frozen=True)

    subgraph: SpanningSubgraph
    f: Coloring
    g: Coloring

    @model_validator(mode="after")
    def check_compatible(self) -> "CompatiblePair":
        problem = _pair_problem(self.subgraph, self.f, self.g)
        if problem:
            raise ValueError(problem)
        return self

    @property
    def palette_size(self) -> int:
        return max(self.f.palette_size, self.g.palette_size)

    @property
    def colors_used(self) -> int:
        return len(self.f.used_colors() | self.g.used_colors())


def tuple_problem(voltage: PermutationVoltage, colorings: tuple[Coloring, ...]) -> str | None:
    """First violated condition of an n-tuple of compatible colorings, or None."""
    if len(colorings) != voltage.fold:
        return f"{len(colorings)} colorings for fold {voltage.fold}"
    h = voltage.cosupport()
    for i, f in enumerate(colorings, start=1):
        if f.graph.vertex_count != h.vertex_count:
            return f"f_{i} colors {f.graph.vertex_count} vertices"
        for u, v in h.sorted_edges():
            if f[u] == f[v]:
                return f"f_{i} is not proper on H: edge {(u, v)} is monochromatic"
    identity_edges = h.edges
    for (u, v), p in voltage.directed().items():
        if (min(u, v), max(u, v)) in identity_edges:
            continue
        for i in range(1, voltage.fold + 1):
            j = perm.apply(p, i)
            if colorings[i - 1][u] == colorings[j - 1][v]:
                return f"f_{i}({u}) == f_{j}({v}) on directed edge ({u}, {v})"
    return None


class CompatibleTuple(BaseModel):
    """
    Colorings f_1..f_n of H = cospt(voltage), each proper on H, with
    f_i(u) != f_{voltage(u, v)(i)}(v) on every directed edge outside H.
    """

    model_config = ConfigDict(frozen=True)

    voltage: PermutationVoltage
    colorings: tuple[Coloring, ...]

    @model_validator(mode="after")
    def check_tuple(self) -> "CompatibleTuple":
        problem = tuple_problem(self.voltage, self.colorings)
        if problem:
            raise ValueError(problem)
        return self

    @property
    def subgraph(self) -> SpanningSubgraph:
        return self.voltage.cosupport()

    @property
    def palette_size(self) -> int:
        return max((c.palette_size for c in self.colorings), default=0)
