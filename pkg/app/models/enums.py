"""
Enums shared by the command line, the HTTP layer and the services.
"""

from enum import Enum, IntEnum


class ChiRelMethod(str, Enum):
    """How chi_G(H) is computed."""

    DIRECT = "direct"
    COVER = "cover"
    BOTH = "both"


class VerifySuite(str, Enum):
    """Invariant suites runnable through `verify`."""

    THM21 = "thm21"  # direct pair search == chromatic number of the double cover
    COR23 = "cor23"  # switching invariance
    COR24 = "cor24"  # class bounds bracket the value
    THM27 = "thm27"  # chi_G(H) == 2 characterization
    THM31 = "thm31"  # quotient-coloring upper bound
    THM34 = "thm34"  # induced-union bounds
    COR36 = "cor36"  # complete components / complete multipartite complement


class ExitCode(IntEnum):
    OK = 0
    VIOLATION = 1
    USAGE = 2
    SIZE_GUARD = 3
    MISMATCH = 4
    VOLTAGE = 5


# Default values
DEFAULT_CHI_REL_METHOD = ChiRelMethod.DIRECT


def validate_chi_rel_method(value: str | None) -> ChiRelMethod:
    """Validate and convert string to ChiRelMethod enum; None means the default."""
    if value is None:
        return DEFAULT_CHI_REL_METHOD
    try:
        return ChiRelMethod(value.strip().lower())
    except ValueError as e:
        known = ", ".join(m.value for m in ChiRelMethod)
        raise ValueError(f"Unknown method: {value}. Available methods are: {known}") from e


def parse_verify_suite(value: str) -> VerifySuite:
    """Strict lookup: an unknown suite name is a usage error, not a default."""
    try:
        return VerifySuite(value.lower())
    except ValueError as e:
        known = ", ".join(s.value for s in VerifySuite)
        raise ValueError(f"Unknown suite: {value}. Available suites are: {known}") from e
