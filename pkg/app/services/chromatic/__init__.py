from .models import (
    Coloring,
    CompatibilityReport,
    CompatiblePair,
    CompatibleTuple,
    tuple_problem,
)
from .relative import (
    check_compatible,
    chi_rel_direct,
    chi_rel_nfold,
    chi_rel_nfold_direct,
    chi_rel_via_cover,
    compatible_pair_direct,
    compatible_pair_via_cover,
    compatible_tuple_direct,
    compatible_tuple_via_cover,
    cover_coloring_from_pair,
)
from .solver import (
    ChromaticSolver,
    chromatic_number,
    clique_bound,
    greedy_bound,
    is_k_colorable,
    iter_colorings,
    optimal_coloring,
)

__all__ = [
    "ChromaticSolver",
    "Coloring",
    "CompatibilityReport",
    "CompatiblePair",
    "CompatibleTuple",
    "check_compatible",
    "chi_rel_direct",
    "chi_rel_nfold",
    "chi_rel_nfold_direct",
    "chi_rel_via_cover",
    "chromatic_number",
    "clique_bound",
    "compatible_pair_direct",
    "compatible_pair_via_cover",
    "compatible_tuple_direct",
    "compatible_tuple_via_cover",
    "cover_coloring_from_pair",
    "greedy_bound",
    "is_k_colorable",
    "iter_colorings",
    "optimal_coloring",
    "tuple_problem",
]
