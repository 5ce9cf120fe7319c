from .estimates import (
    characterize_chi2,
    check_bipartite_quotient,
    chi_rel_complete_multipartite,
    complete_components_bound,
    delta_s,
    independent_color_count,
    induced_union_bounds,
    quotient_coloring_bound,
    quotient_upper_bound,
    realize_chi_rel,
    switching_class_bounds,
)
from .models import (
    BipartiteQuotientCheck,
    BoundReport,
    QuotientColoringContext,
    RealizationResult,
    RespectfulColoring,
)
from .witnesses import class_partner, mirrored_pair, shifted_partner, switch_pair

__all__ = [
    "BipartiteQuotientCheck",
    "BoundReport",
    "QuotientColoringContext",
    "RealizationResult",
    "RespectfulColoring",
    "characterize_chi2",
    "check_bipartite_quotient",
    "chi_rel_complete_multipartite",
    "class_partner",
    "complete_components_bound",
    "delta_s",
    "independent_color_count",
    "induced_union_bounds",
    "mirrored_pair",
    "quotient_coloring_bound",
    "quotient_upper_bound",
    "realize_chi_rel",
    "shifted_partner",
    "switch_pair",
    "switching_class_bounds",
]
