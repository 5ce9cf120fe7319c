"""Tests for the exact chromatic solver."""

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import settings as hyp_settings
from pydantic import ValidationError

from app.core.errors import ImproperColoringError, SizeLimitError
from app.services.chromatic import (
    ChromaticSolver,
    Coloring,
    chromatic_number,
    clique_bound,
    greedy_bound,
    is_k_colorable,
    iter_colorings,
    optimal_coloring,
)
from app.services.graph_core import Graph
from app.services.oracle import brute_chromatic
from tests.builders import graphs, petersen


class TestColoring:
    def test_totality(self, diamond):
        with pytest.raises(ValidationError):
            Coloring(graph=diamond, colors=(1, 2, 3), palette_size=3)

    def test_palette_range(self, diamond):
        with pytest.raises(ValidationError):
            Coloring(graph=diamond, colors=(1, 2, 3, 4), palette_size=3)

    def test_conflicts(self, diamond):
        c = Coloring.of(diamond, [1, 2, 1, 2])
        assert c.first_conflict() == (0, 2)
        assert not c.is_proper()
        with pytest.raises(ImproperColoringError):
            c.require_proper()

    def test_color_classes(self, diamond):
        c = Coloring.of(diamond, [1, 2, 3, 2])
        assert c.color_classes() == {1: frozenset({0}), 2: frozenset({1, 3}), 3: frozenset({2})}
        assert c.palette_size == 3


class TestChromaticNumber:
    @pytest.mark.parametrize(
        "graph, expected",
        [
            (Graph.null(0), 0),
            (Graph.null(3), 1),
            (Graph.complete(5), 5),
            (Graph.cycle(5), 3),
            (Graph.cycle(6), 2),
            (petersen(), 3),
        ],
    )
    def test_known_values(self, graph, expected):
        assert chromatic_number(graph) == expected

    def test_diamond(self, diamond):
        assert chromatic_number(diamond) == 3

    def test_optimal_coloring_is_proper_and_canonical(self, diamond):
        c = optimal_coloring(diamond)
        assert c.is_proper()
        assert c[0] == 1
        assert c.palette_size == 3

    def test_disconnected_graph_uses_the_largest_component(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (5, 6)])
        assert chromatic_number(g) == 3

    def test_bounds(self):
        g = Graph.cycle(5)
        assert clique_bound(g) == 2
        assert greedy_bound(g) >= 3

    @given(graphs(max_vertices=6))
    @hyp_settings(max_examples=80, deadline=None)
    def test_matches_brute_force(self, g):
        assert chromatic_number(g) == brute_chromatic(g)

    @given(graphs(max_vertices=8))
    @hyp_settings(max_examples=40, deadline=None)
    def test_between_clique_and_greedy(self, g):
        chi = chromatic_number(g)
        assert clique_bound(g) <= chi <= greedy_bound(g)


class TestKColorable:
    def test_triangle(self):
        assert is_k_colorable(Graph.complete(3), 2) is None
        coloring = is_k_colorable(Graph.complete(3), 3)
        assert coloring is not None and coloring.is_proper()

    def test_petersen_is_three_colorable(self):
        coloring = is_k_colorable(petersen(), 3)
        assert coloring is not None
        assert coloring.is_proper()
        assert coloring.palette_size == 3

    def test_zero_colors(self):
        assert is_k_colorable(Graph.null(0), 0) is not None
        assert is_k_colorable(Graph.null(1), 0) is None

    def test_negative_k(self):
        with pytest.raises(ValueError):
            is_k_colorable(Graph.null(1), -1)


class TestSizeGuard:
    def test_refuses_large_graphs_with_greedy_bound(self):
        g = Graph.cycle(9)
        with pytest.raises(SizeLimitError) as exc:
            ChromaticSolver(g, vertex_limit=8, allow_large=False).solve()
        assert exc.value.greedy_bound is not None
        assert exc.value.greedy_bound >= 3

    def test_allow_large_overrides(self):
        g = Graph.cycle(9)
        assert len(ChromaticSolver(g, vertex_limit=8, allow_large=True).solve().used_colors()) == 3


class TestIterColorings:
    def test_counts_up_to_color_permutation(self):
        # 3-colorings of the path on 3 vertices using all three colors: 1-2-3 only
        colorings = list(iter_colorings(Graph.path(3), 3))
        assert [c.colors for c in colorings] == [(1, 2, 3)]

    def test_every_coloring_is_proper_and_uses_k_colors(self):
        g = Graph.cycle(6)
        colorings = list(iter_colorings(g, 3))
        assert colorings
        assert all(c.is_proper() and len(c.used_colors()) == 3 for c in colorings)

    def test_limit(self):
        assert len(list(iter_colorings(Graph.null(6), 2, limit=3))) == 3

    def test_networkx_agrees_on_bipartiteness(self):
        g = Graph.cycle(8)
        assert (chromatic_number(g) == 2) == nx.is_bipartite(g.to_networkx())
