"""
Signed graphs (.sg), permutation voltages (.pvg) and fiber-map sidecars.

.sg:  `p sg <n> <m>` then `e <u> <v> <+|->`
.pvg: `p pvg <n> <m> <fold>` then `e <u> <v> <perm>`, perm the one-line image
      of 1..fold, comma separated, carried by the directed edge u -> v
fiber sidecar: `f <cover vertex> <base vertex> <sheet>`, all 1-based
"""

from app.core.errors import GraphFormatError, VoltageError
from app.services.covering import CoveringGraph, PermutationVoltage, Signing
from app.services.covering import permutations as perm
from app.services.graph_core import Edge, Graph, normalize_edge

from .dimacs import header_fields, iter_records, parse_edge_line

_SIGNS = {"+": 1, "+1": 1, "-": -1, "-1": -1}


def parse_signing(text: str) -> Signing:
    n: int | None = None
    signs: dict[Edge, int] = {}
    for lineno, tokens in iter_records(text):
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate 'p' line", line=lineno)
            n, _ = header_fields(tokens, lineno, ("sg", "edge"), 4)
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge before the 'p' line", line=lineno)
            u, v = parse_edge_line(tokens, n, lineno, 4)
            if tokens[3] not in _SIGNS:
                raise VoltageError(f"line {lineno}: sign must be + or -, got {tokens[3]!r}")
            e, s = normalize_edge(u, v), _SIGNS[tokens[3]]
            if signs.get(e, s) != s:
                raise VoltageError(f"line {lineno}: edge ({u + 1}, {v + 1}) signed both ways")
            signs[e] = s
        else:
            raise GraphFormatError(f"unknown record type {tokens[0]!r}", line=lineno)
    if n is None:
        raise GraphFormatError("missing 'p sg <n> <m>' line")
    base = Graph.model_construct(vertex_count=n, edges=frozenset(signs))
    return Signing.from_signs(base, signs)


def emit_signing(phi: Signing) -> str:
    lines = [f"p sg {phi.base.vertex_count} {phi.base.edge_count}"]
    for (u, v), s in phi.signs().items():
        lines.append(f"e {u + 1} {v + 1} {'+' if s == 1 else '-'}")
    return "\n".join(lines) + "\n"


def parse_voltage(text: str) -> PermutationVoltage:
    header: list[int] | None = None
    directed: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, tokens in iter_records(text):
        if tokens[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate 'p' line", line=lineno)
            header = header_fields(tokens, lineno, ("pvg",), 5)
            if header[2] < 1:
                raise VoltageError(f"line {lineno}: fold must be positive, got {header[2]}")
        elif tokens[0] == "e":
            if header is None:
                raise GraphFormatError("edge before the 'p' line", line=lineno)
            n, _, fold = header
            u, v = parse_edge_line(tokens, n, lineno, 4)
            try:
                p = perm.parse_one_line(tokens[3])
            except ValueError:
                raise GraphFormatError(
                    f"permutation must be comma-separated integers, got {tokens[3]!r}", line=lineno
                ) from None
            if not perm.is_permutation(p, fold):
                raise VoltageError(f"line {lineno}: {tokens[3]} is not a permutation of 1..{fold}")
            if directed.get((u, v), p) != p:
                raise VoltageError(f"line {lineno}: edge ({u + 1}, {v + 1}) has two voltages")
            directed[(u, v)] = p
        else:
            raise GraphFormatError(f"unknown record type {tokens[0]!r}", line=lineno)
    if header is None:
        raise GraphFormatError("missing 'p pvg <n> <m> <fold>' line")
    n, _, fold = header
    base = Graph.model_construct(
        vertex_count=n, edges=frozenset(normalize_edge(u, v) for u, v in directed)
    )
    return PermutationVoltage.from_directed(base, fold, directed)


def emit_voltage(phi: PermutationVoltage) -> str:
    lines = [f"p pvg {phi.base.vertex_count} {phi.base.edge_count} {phi.fold}"]
    for (u, v), p in phi.assign:
        lines.append(f"e {u + 1} {v + 1} {perm.format_one_line(p)}")
    return "\n".join(lines) + "\n"


def emit_fiber_map(cover: CoveringGraph) -> str:
    lines = [
        f"f {x + 1} {v + 1} {sheet}" for x, (v, sheet) in enumerate(cover.fiber_label)
    ]
    return "\n".join(lines) + "\n"
