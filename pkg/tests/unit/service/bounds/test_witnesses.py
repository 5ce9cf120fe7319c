"""Tests for the compatible-pair constructors behind the upper bounds."""

import pytest
from pydantic import ValidationError

from app.services.bounds import (
    QuotientColoringContext,
    RespectfulColoring,
    class_partner,
    mirrored_pair,
    shifted_partner,
    switch_pair,
)
from app.services.bounds.witnesses import constant_pair
from app.services.chromatic import Coloring, check_compatible, optimal_coloring
from app.services.graph_core import Graph, Partition, SpanningSubgraph
from app.services.switching import seidel_switch
from tests.builders import clique_subgraph


class TestClassPartner:
    def test_dependent_classes_are_lifted(self):
        h = SpanningSubgraph.null(Graph.complete(3))
        f = Coloring.of(h.as_graph(), [1, 1, 1])
        pair = class_partner(h, f)
        assert pair.g.colors == (2, 2, 2)
        assert pair.colors_used == 2

    def test_independent_classes_are_kept(self, paw):
        f = Coloring.of(paw.as_graph(), [1, 2, 3, 2])
        pair = class_partner(paw, f)
        assert pair.g.colors == f.colors
        assert pair.colors_used == 3


class TestSwitchPair:
    def test_null_pair_carried_to_the_star(self, diamond, star):
        null = seidel_switch(star, [2])
        assert null == SpanningSubgraph.null(diamond)
        pair = class_partner(null, Coloring.of(null.as_graph(), [1, 1, 1, 1]))
        carried = switch_pair(pair, [2], star)
        assert carried.f.colors == (1, 1, 2, 1)
        assert carried.g.colors == (2, 2, 1, 2)
        assert check_compatible(star, carried.f, carried.g)


class TestConstantPair:
    def test_any_subgraph(self, diamond, paw):
        pair = constant_pair(paw, optimal_coloring(diamond))
        assert pair.f == pair.g
        assert pair.colors_used == 3


class TestRespectfulColoring:
    @pytest.fixture
    def context(self):
        h = clique_subgraph(5, 3)
        partition, q = QuotientColoringContext.complement_quotient(h)
        return QuotientColoringContext.build(h, partition, q, Coloring.of(q, [1]))

    def test_single_part(self, context):
        assert len(context.complement_partition) == 1
        assert context.parts == (frozenset(range(5)),)

    def test_counts(self, context):
        f = Coloring.of(context.subgraph.as_graph(), [1, 2, 1, 1, 1])
        respectful = RespectfulColoring(context=context, f=f)
        assert respectful.dependent_colors() == {1}
        assert respectful.independent_counts() == [1]
        assert respectful.dependent_counts() == [1]

    def test_too_many_colors(self, context):
        f = Coloring.of(context.subgraph.as_graph(), [1, 2, 3, 1, 1])
        with pytest.raises(ValidationError):
            RespectfulColoring(context=context, f=f)

    def test_shifted_partner_adds_one_color(self, context):
        f = Coloring.of(context.subgraph.as_graph(), [1, 2, 1, 1, 1])
        pair = shifted_partner(RespectfulColoring(context=context, f=f))
        assert pair.g.colors == (3, 2, 3, 3, 3)
        assert pair.colors_used == 3


class TestMirroredPair:
    def test_two_blocks_of_k4(self):
        g = Graph.complete(4)
        p = Partition.from_blocks(4, [[0, 1], [2, 3]])
        h = SpanningSubgraph.of(g, [(0, 1), (2, 3)])
        blocks = [([1, 2], {0: 0, 1: 1}), ([1, 2], {2: 0, 3: 1})]
        pair = mirrored_pair(h, p, blocks, 4)
        assert pair.f.colors == (1, 2, 1, 2)
        assert pair.g.colors == (4, 3, 4, 3)
