"""Tests for permutations and tree-normalized voltage enumeration."""

import pytest

from app.core.errors import PreconditionError, SizeLimitError
from app.services.covering import (
    derive_nfold_cover,
    spanning_tree_edges,
    tree_normalized_voltages,
    verify_covering,
)
from app.services.covering import permutations as perm
from app.services.graph_core import Graph


class TestPermutations:
    def test_identity_and_inverse(self):
        p = (2, 3, 4, 1)
        assert perm.is_identity(perm.identity(4))
        assert perm.compose(p, perm.inverse(p)) == perm.identity(4)

    def test_compose_applies_right_argument_first(self):
        p, q = (2, 1, 3), (1, 3, 2)
        # q sends 2 to 3, then p fixes 3
        assert perm.apply(perm.compose(p, q), 2) == 3

    def test_from_cycles(self):
        assert perm.from_cycles(4, [(1, 2), (3, 4)]) == (2, 1, 4, 3)
        assert perm.from_cycles(4, [(1, 2, 3, 4)]) == (2, 3, 4, 1)

    def test_one_line_text(self):
        assert perm.parse_one_line("2,3,1") == (2, 3, 1)
        assert perm.format_one_line((2, 3, 1)) == "2,3,1"
        with pytest.raises(ValueError):
            perm.parse_one_line("2,x,1")

    def test_is_permutation(self):
        assert perm.is_permutation((3, 1, 2), 3)
        assert not perm.is_permutation((1, 1, 2), 3)
        assert not perm.is_permutation((1, 2), 3)

    def test_conjugate_by_identity(self):
        assert perm.conjugate((2, 3, 1), perm.identity(3)) == (2, 3, 1)

    def test_all_permutations(self):
        assert len(list(perm.all_permutations(4))) == 24


class TestTreeNormalizedVoltages:
    def test_spanning_tree_has_n_minus_one_edges(self, diamond):
        tree = spanning_tree_edges(diamond)
        assert len(tree) == 3
        assert tree <= diamond.edges

    def test_tree_has_a_single_voltage(self):
        voltages = list(tree_normalized_voltages(Graph.path(4), 3))
        assert len(voltages) == 1
        assert all(perm.is_identity(p) for _, p in voltages[0].assign)

    def test_triangle_fold_three_has_one_voltage_per_conjugacy_class(self):
        # S_3 has three conjugacy classes
        voltages = list(tree_normalized_voltages(Graph.complete(3), 3))
        assert len(voltages) == 3

    def test_every_voltage_derives_a_covering(self, diamond):
        for phi in tree_normalized_voltages(diamond, 3):
            assert verify_covering(derive_nfold_cover(phi)).valid

    def test_disconnected_base_rejected(self):
        with pytest.raises(PreconditionError):
            list(tree_normalized_voltages(Graph.null(3), 2))

    def test_enumeration_limit(self):
        with pytest.raises(SizeLimitError):
            list(tree_normalized_voltages(Graph.complete(6), 4))
