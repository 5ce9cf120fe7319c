"""Tests for signings, double covers and the covering check."""

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import settings as hyp_settings
from hypothesis import strategies as st

from app.core.errors import PreconditionError, SubgraphMismatchError, VoltageError
from app.services.covering import (
    CoveringGraph,
    PermutationVoltage,
    Signing,
    derive_double_cover,
    derive_nfold_cover,
    signing_from_cosupport,
    verify_covering,
    z2_cycle_parity_check,
)
from app.services.graph_core import Graph, SpanningSubgraph, is_bipartite
from tests.builders import any_signing, spanning_subgraphs


class TestSigning:
    """Tests for the Signing model."""

    def test_from_signs_requires_every_edge(self, diamond):
        with pytest.raises(SubgraphMismatchError):
            Signing.from_signs(diamond, {(0, 1): 1})

    def test_from_signs_rejects_other_values(self, diamond):
        signs = {e: 1 for e in diamond.edges}
        signs[(0, 1)] = 0
        with pytest.raises(VoltageError):
            Signing.from_signs(diamond, signs)

    def test_support_and_cosupport_partition_the_edges(self, diamond):
        phi = any_signing(diamond, negative=[(0, 1), (2, 3)])
        assert phi.support().sorted_edges() == [(0, 1), (2, 3)]
        assert phi.cosupport().sorted_edges() == [(0, 2), (0, 3), (1, 2)]
        assert phi.sign(1, 0) == -1

    def test_signing_from_cosupport(self, diamond, star):
        assert signing_from_cosupport(SpanningSubgraph.whole(diamond)).negative_edges == frozenset()
        assert signing_from_cosupport(SpanningSubgraph.null(diamond)).negative_edges == diamond.edges
        phi = signing_from_cosupport(star)
        assert len(phi.negative_edges) == 2
        assert phi.cosupport() == star


class TestDoubleCover:
    """Tests for derive_double_cover."""

    def test_all_positive_gives_two_copies(self, diamond):
        cover = derive_double_cover(Signing.all_positive(diamond))
        assert cover.graph.vertex_count == 8
        assert nx.number_connected_components(cover.graph.to_networkx()) == 2

    def test_all_negative_triangle_is_hexagon(self):
        cover = derive_double_cover(Signing.all_negative(Graph.complete(3)))
        assert nx.is_isomorphic(cover.graph.to_networkx(), nx.cycle_graph(6))

    def test_h2_cover_is_bipartite(self, star):
        cover = derive_double_cover(signing_from_cosupport(star))
        assert cover.graph.vertex_count == 8
        assert is_bipartite(cover.graph) is not None

    def test_fiber_labels(self, diamond):
        cover = derive_double_cover(Signing.all_positive(diamond))
        assert cover.fiber_label[:4] == ((0, 1), (0, 2), (1, 1), (1, 2))
        assert cover.projection() == [0, 0, 1, 1, 2, 2, 3, 3]
        assert cover.vertex_of(2, 2) == 5

    @given(spanning_subgraphs(max_vertices=8))
    @hyp_settings(max_examples=60, deadline=None)
    def test_every_derived_cover_is_a_covering(self, h):
        cover = derive_double_cover(signing_from_cosupport(h))
        assert cover.graph.vertex_count == 2 * h.vertex_count
        assert cover.graph.edge_count == 2 * h.parent.edge_count
        assert verify_covering(cover).valid


class TestVerifyCovering:
    """Tests for verify_covering."""

    def test_deleted_edge_flags_both_endpoints(self, diamond):
        cover = derive_double_cover(Signing.all_positive(diamond))
        u, v = cover.graph.sorted_edges()[0]
        broken = CoveringGraph(
            graph=Graph.from_edges(8, cover.graph.edges - {(u, v)}),
            base=diamond,
            fold=2,
            fiber_label=cover.fiber_label,
        )
        report = verify_covering(broken)
        assert not report.valid
        assert report.violating_vertex == u
        assert set(report.flagged) == {u, v}

    def test_uneven_fiber_is_reported(self):
        base = Graph.from_edges(2, [(0, 1)])
        c = CoveringGraph(
            graph=Graph.from_edges(3, [(0, 2), (1, 2)]),
            base=base,
            fold=2,
            fiber_label=((0, 1), (0, 2), (1, 1)),
        )
        report = verify_covering(c)
        assert not report
        assert "fiber over base vertex 1" in (report.reason or "")


class TestNFoldCover:
    """Tests for derive_nfold_cover."""

    def test_identity_voltage_gives_disjoint_copies(self):
        cover = derive_nfold_cover(PermutationVoltage.identity(Graph.complete(3), 3))
        nxg = cover.graph.to_networkx()
        assert nx.number_connected_components(nxg) == 3
        assert verify_covering(cover).valid

    def test_fold_two_matches_double_cover_under_sheet_map(self, paw):
        phi = signing_from_cosupport(paw)
        double = derive_double_cover(phi)
        nfold = derive_nfold_cover(PermutationVoltage.from_signing(phi))
        # double cover index 2v + (0 | 1) equals n-fold index 2v + (sheet - 1)
        assert double.graph == nfold.graph

    def test_fourfold_cover(self, fourfold):
        cover = derive_nfold_cover(fourfold)
        assert cover.graph.vertex_count == 16
        assert cover.graph.edge_count == 20
        assert verify_covering(cover).valid
        assert is_bipartite(cover.graph) is not None

    def test_from_directed_requires_inverse_pairs(self, diamond):
        ident = (1, 2, 3)
        voltages = {e: ident for e in diamond.edges}
        voltages[(0, 1)] = (2, 3, 1)
        voltages[(1, 0)] = (2, 3, 1)
        with pytest.raises(VoltageError):
            PermutationVoltage.from_directed(diamond, 3, voltages)

    def test_reverse_orientation_is_inverted(self, diamond):
        ident = (1, 2, 3)
        voltages = {e: ident for e in diamond.edges if e != (0, 1)}
        voltages[(1, 0)] = (2, 3, 1)
        phi = PermutationVoltage.from_directed(diamond, 3, voltages)
        assert phi.voltage(0, 1) == (3, 1, 2)
        assert phi.voltage(1, 0) == (2, 3, 1)

    def test_missing_or_bad_voltages(self, diamond):
        with pytest.raises(VoltageError):
            PermutationVoltage.from_canonical(diamond, 2, {(0, 1): (1, 2)})
        with pytest.raises(VoltageError):
            PermutationVoltage.from_canonical(diamond, 2, {e: (1, 1) for e in diamond.edges})
        with pytest.raises(VoltageError):
            PermutationVoltage.from_canonical(diamond, 0, {})

    def test_cosupport_is_identity_edges(self, fourfold, star):
        assert fourfold.cosupport() == star


class TestCycleParity:
    """Tests for z2_cycle_parity_check."""

    def test_negative_triangle(self):
        assert z2_cycle_parity_check(Signing.all_negative(Graph.complete(3)))

    def test_positive_triangle(self):
        assert not z2_cycle_parity_check(Signing.all_positive(Graph.complete(3)))

    def test_h2_signing(self, star):
        assert z2_cycle_parity_check(signing_from_cosupport(star))

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            z2_cycle_parity_check(Signing.all_positive(Graph.cycle(4)))
        with pytest.raises(PreconditionError):
            z2_cycle_parity_check(Signing.all_positive(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2)])))

    @given(st.data())
    @hyp_settings(max_examples=60, deadline=None)
    def test_matches_bipartiteness_of_the_cover(self, data):
        h = data.draw(spanning_subgraphs(min_vertices=3, max_vertices=7))
        if is_bipartite(h.parent) is not None:
            return
        phi = signing_from_cosupport(h)
        cover_bipartite = is_bipartite(derive_double_cover(phi).graph) is not None
        assert z2_cycle_parity_check(phi) == cover_bipartite
