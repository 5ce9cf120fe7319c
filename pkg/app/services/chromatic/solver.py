"""
Exact graph coloring.

DSATUR-ordered branch and bound per connected component, seeded with a
greedy upper bound and stopped early at the clique lower bound.
"""

import time
from collections.abc import Iterator

import networkx as nx

from app.core.config import settings
from app.core.errors import SizeLimitError
from app.logging import get_logger
from app.metrics import search_nodes_total, solve_duration_seconds, solver_runs_total
from app.services.graph_core import Graph, components, induced_subgraph

from .models import Coloring

logger = get_logger(__name__)


def greedy_bound(g: Graph) -> int:
    """Colors used by networkx's DSATUR greedy coloring."""
    if g.vertex_count == 0:
        return 0
    coloring = nx.greedy_color(g.to_networkx(), strategy="DSATUR")
    return max(coloring.values()) + 1


def clique_bound(g: Graph) -> int:
    if g.vertex_count == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(g.to_networkx()))


def canonical_relabel(colors: list[int]) -> list[int]:
    """Renumber colors by first occurrence so vertex 0 gets color 1."""
    remap: dict[int, int] = {}
    for c in colors:
        if c not in remap:
            remap[c] = len(remap) + 1
    return [remap[c] for c in colors]


class _Search:
    """Backtracking state for one connected component."""

    def __init__(self, adj: list[set[int]]):
        self.adj = adj
        self.n = len(adj)
        self.colors = [0] * self.n
        self.neighbor_colors: list[dict[int, int]] = [{} for _ in range(self.n)]
        self.nodes = 0
        self.best: list[int] | None = None
        self.upper = 0
        self.lower = 0
        self.first_only = False
        self._colored = 0

    def _select(self) -> int:
        best, best_key = -1, (-1, -1)
        for v in range(self.n):
            if self.colors[v]:
                continue
            key = (len(self.neighbor_colors[v]), len(self.adj[v]))
            if key > best_key:
                best, best_key = v, key
        return best

    def _assign(self, v: int, c: int) -> None:
        self.colors[v] = c
        for u in self.adj[v]:
            counts = self.neighbor_colors[u]
            counts[c] = counts.get(c, 0) + 1

    def _unassign(self, v: int, c: int) -> None:
        self.colors[v] = 0
        for u in self.adj[v]:
            counts = self.neighbor_colors[u]
            counts[c] -= 1
            if not counts[c]:
                del counts[c]

    def run(self, upper: int, lower: int, first_only: bool) -> list[int] | None:
        """
        Best coloring found with fewer than `upper` colors, or None.

        With `first_only` the first such coloring is returned; otherwise the
        bound tightens until `lower` is reached or the tree is exhausted.
        """
        self.best = None
        self.upper = upper
        self.lower = lower
        self.first_only = first_only
        self._colored = 0
        self._branch(0)
        return self.best

    def _done(self) -> bool:
        return self.best is not None and (self.first_only or self.upper <= self.lower)

    def _branch(self, used: int) -> None:
        self.nodes += 1
        if used >= self.upper:
            return
        if self._colored == self.n:
            self.best = self.colors[:]
            self.upper = used
            return
        v = self._select()
        # Existing colors first, then one new color.
        for c in range(1, min(used + 1, self.upper - 1) + 1):
            if c in self.neighbor_colors[v]:
                continue
            self._assign(v, c)
            self._colored += 1
            self._branch(max(used, c))
            self._colored -= 1
            self._unassign(v, c)
            if self._done():
                return


class ChromaticSolver:
    """
    Single-use exact solver for one graph.

    Refuses graphs above the configured vertex limit unless `allow_large`;
    the refusal carries the greedy bound.
    """

    def __init__(
        self,
        graph: Graph,
        *,
        name: str = "chromatic",
        vertex_limit: int | None = None,
        allow_large: bool | None = None,
    ):
        self.graph = graph
        self.name = name
        self.vertex_limit = settings.exact_vertex_limit if vertex_limit is None else vertex_limit
        self.allow_large = settings.allow_large if allow_large is None else allow_large
        self.nodes = 0

    def _guard(self) -> None:
        if self.graph.vertex_count > self.vertex_limit and not self.allow_large:
            bound = greedy_bound(self.graph)
            raise SizeLimitError(
                f"{self.graph.vertex_count} vertices exceed the exact limit "
                f"{self.vertex_limit}; greedy bound {bound}",
                greedy_bound=bound,
            )

    def _component_graphs(self) -> Iterator[tuple[Graph, list[int]]]:
        for block in components(self.graph).blocks:
            sub, mapping = induced_subgraph(self.graph, block)
            back = [0] * len(mapping)
            for original, local in mapping.items():
                back[local] = original
            yield sub, back

    def _solve_component(self, sub: Graph, k: int | None) -> list[int] | None:
        if sub.edge_count == 0:
            return [1] * sub.vertex_count if k is None or k >= 1 else None
        search = _Search(sub.adjacency())
        if k is None:
            upper = greedy_bound(sub)
            lower = clique_bound(sub)
            found = search.run(upper, lower, first_only=False) if lower < upper else None
            if found is None:
                # Greedy was optimal; recolor exactly with `upper` colors.
                found = search.run(upper + 1, upper, first_only=True)
        else:
            found = search.run(k + 1, 1, first_only=True)
        self.nodes += search.nodes
        return found

    def _combine(self, k: int | None) -> Coloring | None:
        self._guard()
        start = time.perf_counter()
        colors = [0] * self.graph.vertex_count
        for sub, back in self._component_graphs():
            local = self._solve_component(sub, k)
            if local is None:
                return None
            for i, c in enumerate(local):
                colors[back[i]] = c
        elapsed = time.perf_counter() - start

        solver_runs_total.labels(solver=self.name).inc()
        search_nodes_total.labels(solver=self.name).inc(self.nodes)
        solve_duration_seconds.labels(solver=self.name).observe(elapsed)

        colors = canonical_relabel(colors)
        palette = max(colors, default=0) if k is None else k
        logger.debug(
            "coloring solved",
            solver=self.name,
            vertices=self.graph.vertex_count,
            edges=self.graph.edge_count,
            colors=max(colors, default=0),
            nodes=self.nodes,
        )
        return Coloring(graph=self.graph, colors=tuple(colors), palette_size=palette)

    def solve(self) -> Coloring:
        """An optimal proper coloring."""
        result = self._combine(None)
        assert result is not None
        return result

    def color_with(self, k: int) -> Coloring | None:
        """A proper coloring with at most k colors, or None."""
        if k < 0:
            raise ValueError("k must be non-negative")
        if self.graph.vertex_count == 0:
            return Coloring(graph=self.graph, colors=(), palette_size=k)
        if k == 0:
            return None
        return self._combine(k)


def chromatic_number(g: Graph, name: str = "chromatic") -> int:
    """0 for the empty graph, 1 for a nonempty edgeless graph."""
    return len(ChromaticSolver(g, name=name).solve().used_colors())


def optimal_coloring(g: Graph, name: str = "chromatic") -> Coloring:
    return ChromaticSolver(g, name=name).solve()


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    return ChromaticSolver(g, name="k-colorable").color_with(k)


def iter_colorings(g: Graph, k: int, limit: int | None = None) -> Iterator[Coloring]:
    """
    Proper colorings with exactly k colors, one per color permutation class
    (colors first appear in increasing vertex order), up to `limit` of them.
    """
    n = g.vertex_count
    adj = g.adjacency()
    colors = [0] * n
    produced = 0

    def extend(v: int, used: int) -> Iterator[list[int]]:
        # Not enough vertices left to introduce the missing colors.
        if k - used > n - v:
            return
        if v == n:
            yield colors[:]
            return
        for c in range(1, min(used + 1, k) + 1):
            if any(colors[u] == c for u in adj[v] if u < v):
                continue
            colors[v] = c
            yield from extend(v + 1, max(used, c))
        colors[v] = 0

    for found in extend(0, 0):
        yield Coloring(graph=g, colors=tuple(found), palette_size=k)
        produced += 1
        if limit is not None and produced >= limit:
            return
