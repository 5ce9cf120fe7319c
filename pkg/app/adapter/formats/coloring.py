"""Colorings as `s <k>` followed by `v <vertex> <color>` lines, 1-based."""

from app.core.errors import GraphFormatError
from app.services.chromatic import Coloring
from app.services.graph_core import Graph, Partition

from .dimacs import iter_records, parse_int, parse_vertex


def parse_coloring(text: str, graph: Graph) -> Coloring:
    palette: int | None = None
    colors: dict[int, int] = {}
    for lineno, tokens in iter_records(text):
        if tokens[0] == "s" and len(tokens) == 2:
            palette = parse_int(tokens[1], lineno, "palette size")
        elif tokens[0] == "v" and len(tokens) == 3:
            v = parse_vertex(tokens[1], graph.vertex_count, lineno)
            if v in colors:
                raise GraphFormatError(f"vertex {v + 1} colored twice", line=lineno)
            colors[v] = parse_int(tokens[2], lineno, "color")
        else:
            raise GraphFormatError(f"unexpected record {' '.join(tokens)!r}", line=lineno)
    missing = [v + 1 for v in graph.vertices() if v not in colors]
    if missing:
        raise GraphFormatError(f"vertices without a color: {missing}")
    values = [colors[v] for v in graph.vertices()]
    if palette is None:
        palette = max(values, default=0)
    bad = [c for c in values if not 1 <= c <= palette]
    if bad:
        raise GraphFormatError(f"color {bad[0]} outside 1..{palette}")
    return Coloring.model_construct(graph=graph, colors=tuple(values), palette_size=palette)


def emit_coloring(coloring: Coloring) -> str:
    lines = [f"s {coloring.palette_size}"]
    lines.extend(f"v {v + 1} {c}" for v, c in enumerate(coloring.colors))
    return "\n".join(lines) + "\n"


def parse_partition(text: str, vertex_count: int) -> Partition:
    """One `b <v> <v> ...` line per block, 1-based."""
    blocks: list[list[int]] = []
    for lineno, tokens in iter_records(text):
        if tokens[0] != "b" or len(tokens) < 2:
            raise GraphFormatError("expected 'b <vertex> ...'", line=lineno)
        blocks.append([parse_vertex(t, vertex_count, lineno) for t in tokens[1:]])
    return Partition.from_blocks(vertex_count, blocks)
