from .derive import (
    derive_double_cover,
    derive_nfold_cover,
    signing_from_cosupport,
    verify_covering,
    z2_cycle_parity_check,
)
from .enumeration import spanning_tree_edges, tree_normalized_voltages
from .models import CoveringGraph, CoveringReport, PermutationVoltage, Signing
from .permutations import Permutation

__all__ = [
    "CoveringGraph",
    "CoveringReport",
    "Permutation",
    "PermutationVoltage",
    "Signing",
    "derive_double_cover",
    "derive_nfold_cover",
    "signing_from_cosupport",
    "spanning_tree_edges",
    "tree_normalized_voltages",
    "verify_covering",
    "z2_cycle_parity_check",
]
