"""
Command line entry point.

    chromacover chi GRAPH [--witness]
    chromacover chi-rel GRAPH SUBGRAPH [--method direct|cover|both] [--witness]
    chromacover cover INPUT [--out PATH]
    chromacover switch GRAPH H K
    chromacover switch-class GRAPH H
    chromacover bounds GRAPH H [--partition FILE] [--seed S] [--exact]
    chromacover realize GRAPH M [--out PATH]
    chromacover verify SUITE [--max-vertices N] [--seed S]

Graphs are DIMACS .col files, signings .sg and voltages .pvg. Results go to
stdout, logs to stderr. The exit status is 0 on success, 1 when a checked
claim fails, 2 on bad input, 3 when a size guard refuses, 4 when a subgraph
does not fit its parent and 5 on an invalid voltage.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from app.adapter.formats import (
    emit_coloring,
    emit_dimacs,
    emit_fiber_map,
    parse_dimacs,
    parse_partition,
    parse_signing,
    parse_voltage,
)
from app.core.config import settings
from app.core.errors import ChromaCoverError
from app.logging import bind_context, clear_context, configure_logging, get_logger
from app.models.enums import (
    ChiRelMethod,
    ExitCode,
    parse_verify_suite,
    validate_chi_rel_method,
)
from app.services.analysis_service import AnalysisService
from app.services.covering import CoveringGraph, CoveringReport
from app.services.graph_core import Graph, SpanningSubgraph

logger = get_logger(__name__)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _graph(path: str) -> Graph:
    return parse_dimacs(_read(path))


def _subgraph(parent: Graph, path: str) -> SpanningSubgraph:
    return SpanningSubgraph.from_graph(parent, _graph(path))


def _vertex_set(vertices: Sequence[int]) -> str:
    return "{" + ", ".join(str(v + 1) for v in sorted(vertices)) + "}"


def _edge_list(h: SpanningSubgraph) -> str:
    return " ".join(f"{u + 1}-{v + 1}" for u, v in h.sorted_edges())


def cmd_chi(args: argparse.Namespace, service: AnalysisService) -> int:
    coloring = service.chromatic(_graph(args.graph))
    print(f"chi {len(coloring.used_colors())}")
    if args.witness:
        print(emit_coloring(coloring), end="")
    return ExitCode.OK


def cmd_chi_rel(args: argparse.Namespace, service: AnalysisService) -> int:
    g = _graph(args.graph)
    h = _subgraph(g, args.subgraph)
    outcome = service.chi_rel(h, validate_chi_rel_method(args.method))
    if outcome.method == ChiRelMethod.BOTH:
        print(f"chi_rel direct={outcome.direct} cover={outcome.cover}")
    else:
        print(f"chi_rel {outcome.value}")
    if args.witness and outcome.pair is not None:
        print("c f")
        print(emit_coloring(outcome.pair.f), end="")
        print("c g")
        print(emit_coloring(outcome.pair.g), end="")
    if not outcome.agree:
        print("violation direct and cover values differ", file=sys.stderr)
        return ExitCode.VIOLATION
    return ExitCode.OK


def _derive(path: str, service: AnalysisService) -> tuple[CoveringGraph, CoveringReport]:
    text = _read(path)
    is_voltage = path.endswith(".pvg") or any(
        line.split()[:2] == ["p", "pvg"] for line in text.splitlines()
    )
    if is_voltage:
        return service.cover_from_voltage(parse_voltage(text))
    return service.cover_from_signing(parse_signing(text))


def cmd_cover(args: argparse.Namespace, service: AnalysisService) -> int:
    cover, report = _derive(args.input, service)
    comment = f"{cover.fold}-fold cover of a {cover.base.vertex_count}-vertex graph"
    dimacs = emit_dimacs(cover.graph, comments=[comment])
    fibers = emit_fiber_map(cover)
    if args.out:
        out = Path(args.out)
        out.write_text(dimacs, encoding="utf-8")
        sidecar = out.with_name(out.name + ".fiber")
        sidecar.write_text(fibers, encoding="utf-8")
        print(f"cover {out} vertices={cover.graph.vertex_count} edges={cover.graph.edge_count}")
        print(f"fiber {sidecar}")
    else:
        print(dimacs, end="")
        print(fibers, end="")
    if not report.valid:
        print(f"violation {report.reason}", file=sys.stderr)
        return ExitCode.VIOLATION
    return ExitCode.OK


def cmd_switch(args: argparse.Namespace, service: AnalysisService) -> int:
    g = _graph(args.graph)
    witness = service.switch(_subgraph(g, args.h), _subgraph(g, args.k))
    if witness is None:
        print("inequivalent")
    else:
        print(f"X = {_vertex_set(witness.sorted_subset())}")
    return ExitCode.OK


def cmd_switch_class(args: argparse.Namespace, service: AnalysisService) -> int:
    g = _graph(args.graph)
    members = service.switch_class(_subgraph(g, args.h))
    for i, member in enumerate(members, start=1):
        print(f"member {i} edges={len(member.edges)} [{_edge_list(member)}]")
    print(f"class-size {len(members)}")
    return ExitCode.OK


def cmd_bounds(args: argparse.Namespace, service: AnalysisService) -> int:
    g = _graph(args.graph)
    h = _subgraph(g, args.subgraph)
    partition = parse_partition(_read(args.partition), g.vertex_count) if args.partition else None
    reports = service.bounds(h, partition, seed=args.seed)
    for report in reports:
        print(report.record())
    if args.exact:
        value = service.chi_rel_exact(h)
        print(f"chi_rel {value}")
        if not all(report.brackets(value) for report in reports):
            print("violation a bound misses the exact value", file=sys.stderr)
            return ExitCode.VIOLATION
    return ExitCode.OK


def cmd_realize(args: argparse.Namespace, service: AnalysisService) -> int:
    g = _graph(args.graph)
    result = service.realize(g, args.m)
    print(
        f"chi_rel {result.value} method={result.method} "
        f"critical_value={result.critical_value} edges=[{_edge_list(result.subgraph)}]"
    )
    if args.out:
        Path(args.out).write_text(emit_dimacs(result.subgraph.as_graph()), encoding="utf-8")
    return ExitCode.OK


def cmd_verify(args: argparse.Namespace, service: AnalysisService) -> int:
    suite = parse_verify_suite(args.suite)
    bind_context(suite=suite.value)
    report = service.verify(suite, args.max_vertices, args.seed)
    for line in report.lines():
        print(line)
    return ExitCode.OK if report.passed else ExitCode.VIOLATION


COMMANDS = {
    "chi": cmd_chi,
    "chi-rel": cmd_chi_rel,
    "cover": cmd_cover,
    "switch": cmd_switch,
    "switch-class": cmd_switch_class,
    "bounds": cmd_bounds,
    "realize": cmd_realize,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromacover",
        description="Relative chromatic numbers, graph covers and Seidel switching",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="chromatic number of a DIMACS graph")
    p.add_argument("graph")
    p.add_argument("--witness", action="store_true", help="also print an optimal coloring")

    p = sub.add_parser("chi-rel", help="relative chromatic number chi_G(H)")
    p.add_argument("graph")
    p.add_argument("subgraph", help="DIMACS file of H on the same vertices")
    p.add_argument("--method", default="direct", choices=[m.value for m in ChiRelMethod])
    p.add_argument("--witness", action="store_true", help="also print a compatible pair")

    p = sub.add_parser("cover", help="derived graph of a signing (.sg) or voltage (.pvg)")
    p.add_argument("input")
    p.add_argument("--out", help="DIMACS output path; the fiber map goes to <out>.fiber")

    p = sub.add_parser("switch", help="Seidel switching witness between H and K")
    p.add_argument("graph")
    p.add_argument("h")
    p.add_argument("k")

    p = sub.add_parser("switch-class", help="every member of the switching class of H")
    p.add_argument("graph")
    p.add_argument("h")

    p = sub.add_parser("bounds", help="bounds on chi_G(H)")
    p.add_argument("graph")
    p.add_argument("subgraph")
    p.add_argument("--partition", help="blocks for the induced-union bounds, `b v ...` lines")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--exact", action="store_true", help="also compute chi_G(H) and check the bounds")

    p = sub.add_parser("realize", help="a spanning subgraph H with chi_G(H) = M")
    p.add_argument("graph")
    p.add_argument("m", type=int)
    p.add_argument("--out", help="write H as DIMACS")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite")
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--seed", type=int, default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(level=args.log_level or settings.log_level, compact=settings.log_compact)
    clear_context()
    bind_context(command=args.command)
    if getattr(args, "seed", None) is None and hasattr(args, "seed"):
        args.seed = settings.seed

    logger.debug("command started", arguments=vars(args))

    service = AnalysisService()
    try:
        return int(COMMANDS[args.command](args, service))
    except ChromaCoverError as e:
        print(f"error: {e}", file=sys.stderr)
        return int(e.exit_code)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCode.USAGE)
    finally:
        clear_context()


if __name__ == "__main__":
    sys.exit(main())
