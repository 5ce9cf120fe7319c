from .coloring import emit_coloring, parse_coloring, parse_partition
from .covering import (
    emit_fiber_map,
    emit_signing,
    emit_voltage,
    parse_signing,
    parse_voltage,
)
from .dimacs import emit_dimacs, parse_dimacs

__all__ = [
    "emit_coloring",
    "emit_dimacs",
    "emit_fiber_map",
    "emit_signing",
    "emit_voltage",
    "parse_coloring",
    "parse_dimacs",
    "parse_partition",
    "parse_signing",
    "parse_voltage",
]
