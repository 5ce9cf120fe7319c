"""
End-to-end checks over exhaustive small-graph corpora.

Slow; run with `python run_tests.py integration`.
"""

import random

import networkx as nx
import pytest

from app.models.enums import VerifySuite
from app.services.bounds import quotient_upper_bound
from app.services.chromatic import (
    CompatibleTuple,
    chi_rel_direct,
    chi_rel_nfold,
    chi_rel_via_cover,
    chromatic_number,
    compatible_tuple_via_cover,
)
from app.services.covering import derive_nfold_cover, tree_normalized_voltages
from app.services.graph_core import Graph, complement_within, is_connected, union_of_induced
from app.services.oracle import brute_chi_rel, brute_chromatic
from app.services.verification import (
    clique_in_complete,
    connected_graphs,
    run_suite,
    set_partitions,
    spanning_subgraphs,
)

pytestmark = pytest.mark.integration


class TestSuites:
    @pytest.mark.parametrize(
        "suite",
        [
            VerifySuite.THM21,
            VerifySuite.THM27,
            VerifySuite.COR24,
            VerifySuite.THM31,
            VerifySuite.THM34,
        ],
    )
    def test_exhaustive_six_vertex_corpus(self, suite):
        report = run_suite(suite, max_vertices=6, seed=0)
        assert report.passed, report.lines()[:5]

    def test_switching_invariance_on_random_instances(self):
        report = run_suite(VerifySuite.COR23, max_vertices=9, seed=0)
        assert report.instances == 200
        assert report.passed, report.lines()[:5]


class TestNamedInstances:
    def test_paw_and_star(self, diamond, paw, star):
        assert chromatic_number(diamond) == 3
        assert chi_rel_direct(paw) == chi_rel_via_cover(paw) == 3
        assert chi_rel_direct(star) == chi_rel_via_cover(star) == 2

    def test_fourfold_cover(self, fourfold):
        assert chi_rel_nfold(fourfold) == 2
        recovered = compatible_tuple_via_cover(fourfold)
        CompatibleTuple(voltage=recovered.voltage, colorings=recovered.colorings)

    def test_every_threefold_cover_of_the_diamond_has_chi_three(self, diamond):
        checked = 0
        for phi in tree_normalized_voltages(diamond, 3):
            cover = derive_nfold_cover(phi)
            if not is_connected(cover.graph):
                continue
            checked += 1
            assert chromatic_number(cover.graph) == 3
        assert checked > 0


class TestCompleteParents:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_cliques_plus_isolated_vertices(self, n):
        for m in range(2, n + 1):
            h = clique_in_complete(n, m)
            assert chi_rel_direct(h) == m
            assert quotient_upper_bound(h) == m

    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete_multipartite_subgraphs(self, n):
        k = Graph.complete(n)
        for p in set_partitions(n):
            if len(p) < 2:
                continue
            assert chi_rel_direct(complement_within(union_of_induced(k, p))) == len(p)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_disjoint_cliques(self, n):
        k = Graph.complete(n)
        for p in set_partitions(n):
            sizes = sorted((len(b) for b in p.blocks), reverse=True)
            assert chi_rel_direct(union_of_induced(k, p)) == sum(sizes[:2])


class TestOracles:
    def test_chromatic_number_on_random_graphs(self):
        rng = random.Random(0)
        for _ in range(500):
            n = rng.randint(1, 8)
            nxg = nx.gnp_random_graph(n, rng.uniform(0.1, 0.5), seed=rng.randrange(2**32))
            g = Graph.from_networkx(nxg)
            assert chromatic_number(g) == brute_chromatic(g)

    def test_relative_chromatic_number_on_five_vertices(self):
        for g in connected_graphs(5):
            for h in spanning_subgraphs(g):
                assert chi_rel_direct(h) == brute_chi_rel(h)
