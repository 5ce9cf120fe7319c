"""
DIMACS .col text <-> Graph.

External vertices are 1-based, internal ones 0-based. Emission writes the
header and then the edges in lexicographic order.
"""

from collections.abc import Iterator, Sequence

from app.core.errors import GraphFormatError, VertexRangeError
from app.logging import get_logger
from app.services.graph_core import Edge, Graph, normalize_edge

logger = get_logger(__name__)

Record = tuple[int, list[str]]


def iter_records(text: str) -> Iterator[Record]:
    """(1-based line number, tokens) for every non-blank, non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        yield lineno, tokens


def parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} must be an integer, got {token!r}", line=lineno) from None


def parse_vertex(token: str, n: int, lineno: int) -> int:
    """1-based token -> 0-based vertex."""
    v = parse_int(token, lineno, "vertex")
    if not 1 <= v <= n:
        raise VertexRangeError(f"line {lineno}: vertex {v} outside 1..{n}")
    return v - 1


def parse_edge_line(tokens: list[str], n: int, lineno: int, arity: int) -> Edge:
    if len(tokens) != arity:
        raise GraphFormatError(
            f"expected {arity} fields on an edge line, got {len(tokens)}", line=lineno
        )
    u = parse_vertex(tokens[1], n, lineno)
    v = parse_vertex(tokens[2], n, lineno)
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u + 1}", line=lineno)
    return (u, v)


def header_fields(
    tokens: list[str], lineno: int, kinds: Sequence[str], arity: int
) -> list[int]:
    """Integer fields of a `p <kind> ...` line."""
    if len(tokens) != arity or tokens[1] not in kinds:
        raise GraphFormatError(
            f"malformed header, expected 'p {kinds[0]}' with {arity - 2} counts",
            line=lineno,
        )
    values = [parse_int(t, lineno, "header field") for t in tokens[2:]]
    if any(value < 0 for value in values):
        raise GraphFormatError("header counts must be non-negative", line=lineno)
    return values


def parse_dimacs(text: str) -> Graph:
    n: int | None = None
    declared = 0
    edges: set[Edge] = set()
    for lineno, tokens in iter_records(text):
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError("duplicate 'p' line", line=lineno)
            n, declared = header_fields(tokens, lineno, ("edge", "col"), 4)
        elif kind == "e":
            if n is None:
                raise GraphFormatError("edge before the 'p' line", line=lineno)
            u, v = parse_edge_line(tokens, n, lineno, 3)
            e = normalize_edge(u, v)
            if e in edges:
                logger.debug("duplicate edge dropped", line=lineno, edge=(u + 1, v + 1))
            edges.add(e)
        else:
            raise GraphFormatError(f"unknown record type {kind!r}", line=lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge <n> <m>' line")
    if declared != len(edges):
        logger.warning("edge count differs from header", declared=declared, found=len(edges))
    return Graph.model_construct(vertex_count=n, edges=frozenset(edges))


def emit_dimacs(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"
