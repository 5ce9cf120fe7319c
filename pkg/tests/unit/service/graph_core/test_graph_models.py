"""Tests for Graph, SpanningSubgraph and Partition."""

import networkx as nx
import pytest
from pydantic import ValidationError

from app.core.errors import (
    GraphFormatError,
    PartitionError,
    SubgraphMismatchError,
    VertexRangeError,
)
from app.services.graph_core import Graph, Partition, SpanningSubgraph
from tests.builders import GraphBuilder


class TestGraph:
    """Tests for the Graph model."""

    def test_edges_are_normalized(self):
        g = Graph.from_edges(3, [(2, 0), (1, 2)])
        assert g.edges == frozenset({(0, 2), (1, 2)})
        assert g.has_edge(2, 0)

    def test_duplicate_orientations_collapse(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0)])
        assert g.edge_count == 1

    def test_loop_rejected(self):
        with pytest.raises(GraphFormatError):
            Graph.from_edges(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(VertexRangeError):
            Graph.from_edges(3, [(0, 3)])

    def test_validator_path_raises_validation_error(self):
        with pytest.raises(ValidationError):
            Graph(vertex_count=2, edges=frozenset({(0, 5)}))

    def test_named_families(self):
        assert Graph.complete(5).edge_count == 10
        assert Graph.cycle(6).edge_count == 6
        assert Graph.path(4).sorted_edges() == [(0, 1), (1, 2), (2, 3)]
        assert Graph.null(3).edge_count == 0
        with pytest.raises(VertexRangeError):
            Graph.cycle(2)

    def test_networkx_round_trip_keeps_isolated_vertices(self):
        g = Graph.from_edges(5, [(0, 1)])
        back = Graph.from_networkx(g.to_networkx())
        assert back == g
        assert nx.number_of_isolates(g.to_networkx()) == 3

    def test_degree_and_adjacency(self, diamond):
        assert [diamond.degree(v) for v in diamond.vertices()] == [3, 2, 3, 2]
        assert diamond.adjacency()[0] == {1, 2, 3}

    def test_check_vertices(self, diamond):
        assert diamond.check_vertices([3, 0]) == frozenset({0, 3})
        with pytest.raises(VertexRangeError):
            diamond.check_vertices([4])

    def test_builder(self):
        g = GraphBuilder().with_edge(0, 1).with_edge(1, 2).build()
        assert g.vertex_count == 3
        assert g == Graph.path(3)


class TestSpanningSubgraph:
    """Tests for SpanningSubgraph."""

    def test_of_accepts_parent_edges(self, diamond):
        h = SpanningSubgraph.of(diamond, [(1, 0)])
        assert h.edges == frozenset({(0, 1)})
        assert h.vertex_count == 4

    def test_foreign_edge_is_mismatch(self, diamond):
        with pytest.raises(SubgraphMismatchError):
            SpanningSubgraph.of(diamond, [(1, 3)])

    def test_from_graph_checks_vertex_count(self, diamond):
        with pytest.raises(SubgraphMismatchError):
            SpanningSubgraph.from_graph(diamond, Graph.null(5))

    def test_whole_and_null(self, diamond):
        assert SpanningSubgraph.whole(diamond).edges == diamond.edges
        assert SpanningSubgraph.null(diamond).edges == frozenset()

    def test_outside_edges(self, paw):
        assert paw.outside_edges() == [(2, 3)]

    def test_as_graph_keeps_all_vertices(self, star):
        hg = star.as_graph()
        assert hg.vertex_count == 4
        assert hg.edges == star.edges

    def test_subgraphs_are_hashable_by_value(self, diamond):
        a = SpanningSubgraph.of(diamond, [(0, 1), (1, 2)])
        b = SpanningSubgraph.of(diamond, [(1, 2), (1, 0)])
        assert a == b
        assert len({a, b}) == 1


class TestPartition:
    """Tests for Partition."""

    def test_from_blocks(self):
        p = Partition.from_blocks(4, [[0, 2], [1], [3]])
        assert len(p) == 3
        assert p.block_index() == [0, 1, 0, 2]
        assert p.sorted_blocks() == [[0, 2], [1], [3]]

    @pytest.mark.parametrize(
        "blocks",
        [
            [[0, 1], [1, 2, 3]],  # overlap
            [[0, 1], [2]],  # vertex 3 uncovered
            [[0, 1, 2, 3], []],  # empty block
            [[0, 1, 2, 3, 4]],  # out of range
        ],
    )
    def test_invalid_blocks(self, blocks):
        with pytest.raises(PartitionError):
            Partition.from_blocks(4, blocks)

    def test_singletons_and_whole(self):
        assert len(Partition.singletons(3)) == 3
        assert Partition.whole(3).blocks == (frozenset({0, 1, 2}),)
        assert Partition.whole(0).blocks == ()
