"""
spext command-line interface

Usage:
    spext rho graph.txt
    spext --tol 1e-8 --format json rho graph.txt
    spext family hn --n 5 | spext rho -
    spext maximize graph.txt --trace trace.json
    spext verify --n 6 --class unicyclic

Graphs go to stdout (or -o); reports and diagnostics go to stderr, except
where the report is the product (rho, classify, enumerate reports).

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 eigensolver non-convergence.
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from .config import get_settings
from .enumeration import (
    GraphClass,
    TheoremViolation,
    class_report,
    enumerate_class,
    reports_to_json,
    verify_extremal,
    verify_merge_reduces_t,
    verify_odd_cycle_implies_cactus,
    verify_switch_soundness,
    write_csv,
)
from .families import (
    cycle,
    h_n,
    is_edge_maximal_cactus,
    is_max_edge_cactus,
    k1n_plus,
    path,
    star,
)
from .graph import (
    Graph,
    format_edge_list,
    is_cactus,
    is_connected,
    is_odd_cycle_graph,
    is_unicyclic,
    read_graph,
    t_count,
    to_graph6,
    write_graph,
)
from .schemas import ClassificationSchema, PerronSchema
from .spectral import ConvergenceError, compare_results, spectral_radius
from .transforms import (
    ClosureViolation,
    MonotonicityViolation,
    TransformTrace,
    maximize_cactus,
    sigma_switch,
    unicyclic_ascent,
)

logger = logging.getLogger("spext")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_CONVERGENCE = 3

FAMILIES = {
    "hn": h_n,
    "k1nplus": k1n_plus,
    "star": star,
    "cycle": cycle,
    "path": path,
}

VERIFY_CLASSES = [
    "cactus",
    "max-edge-cactus",
    "unicyclic",
    "odd-cycle",
    "odd-implies-cactus",
    "switch",
    "merge",
]


class UsageError(Exception):
    """Raised instead of exiting when command-line arguments are invalid"""
    pass


class SpextArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _common_options(suppress_defaults: bool = False) -> argparse.ArgumentParser:
    """
    Options accepted before or after the subcommand.

    Subcommand copies suppress their defaults so a value given before the
    subcommand is not overwritten.
    """

    def default(value):
        return argparse.SUPPRESS if suppress_defaults else value

    common = SpextArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=default(None),
        help="Eigensolver tolerance (default: SPEXT_TOL or 1e-10)",
    )
    common.add_argument(
        "--seed", type=int, default=default(None), help="Seed for the random suites"
    )
    common.add_argument(
        "--format",
        choices=["text", "json"],
        default=default("text"),
        help="Report format (default: text)",
    )
    common.add_argument(
        "--jobs",
        type=int,
        default=default(os.cpu_count() or 1),
        help="Worker processes for enumeration (default: machine parallelism)",
    )
    common.add_argument(
        "--log-level",
        default=default(None),
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level on stderr (default: SPEXT_LOG_LEVEL or INFO)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options(suppress_defaults=True)
    parser = SpextArgumentParser(
        prog="spext",
        parents=[_common_options()],
        description="Spectral radius ascent and extremal checks for cacti and unicyclic graphs",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    rho = commands.add_parser("rho", parents=[common], help="Spectral radius and Perron vector")
    rho.add_argument("file", help="Edge-list or graph6 file ('-' for stdin)")

    classify = commands.add_parser("classify", parents=[common], help="Class membership flags")
    classify.add_argument("file", help="Edge-list or graph6 file ('-' for stdin)")

    switch = commands.add_parser("switch", parents=[common], help="Apply one neighbour switch")
    switch.add_argument("file", help="Edge-list or graph6 file ('-' for stdin)")
    switch.add_argument("--u", type=int, required=True, help="Receiving vertex")
    switch.add_argument("--v", type=int, required=True, help="Donating vertex")
    switch.add_argument("--s", required=True, help="Comma-separated neighbours of v to move")
    switch.add_argument("-o", "--output", default="-", help="Output graph file (default: stdout)")

    for name, help_text in (
        ("maximize", "Cactus ascent to the rho-maximal cactus"),
        ("ascent", "Unicyclic ascent to K_{1,n-1}^+"),
    ):
        command = commands.add_parser(name, parents=[common], help=help_text)
        command.add_argument("file", help="Edge-list or graph6 file ('-' for stdin)")
        command.add_argument("--trace", type=Path, default=None, help="Write the JSON trace here")
        command.add_argument(
            "-o", "--output", default="-", help="Output graph file (default: stdout)"
        )
        command.add_argument(
            "--counterexample-dir",
            type=Path,
            default=Path("."),
            help="Directory for failing graphs (default: current directory)",
        )
        if name == "maximize":
            command.add_argument(
                "--connect-components",
                action="store_true",
                help="Join components by bridges instead of rejecting disconnected input",
            )

    family = commands.add_parser("family", parents=[common], help="Write a named graph")
    family.add_argument("name", choices=sorted(FAMILIES))
    family.add_argument("--n", type=int, required=True, help="Order")
    family.add_argument("-o", "--output", default="-", help="Output graph file (default: stdout)")
    family.add_argument("--graph6", action="store_true", help="Write graph6 instead of edge list")

    enumerate_ = commands.add_parser("enumerate", parents=[common], help="Enumerate a class")
    enumerate_.add_argument("--n", type=int, required=True, help="Order")
    enumerate_.add_argument(
        "--class", dest="graph_class", required=True, choices=[c.value for c in GraphClass]
    )
    enumerate_.add_argument(
        "--out",
        choices=["graphs", "csv", "json"],
        default="graphs",
        help="graphs: one graph6 line per class; csv/json: a class report",
    )

    verify = commands.add_parser("verify", parents=[common], help="Verify an extremal result")
    verify.add_argument("--n", type=int, default=None, help="Order (exhaustive checks)")
    verify.add_argument("--class", dest="graph_class", required=True, choices=VERIFY_CLASSES)
    verify.add_argument("--samples", type=int, default=None, help="Cases for switch/merge suites")
    verify.add_argument(
        "--counterexample-dir",
        type=Path,
        default=Path("."),
        help="Directory for counterexample files (default: current directory)",
    )
    return parser


def _emit(args, text_lines: List[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _write_counterexample(graph: Optional[Graph], directory: Path, label: str) -> Optional[Path]:
    if graph is None:
        return None
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / f"counterexample-{label}-n{graph.n}.txt"
    target.write_text(format_edge_list(graph), encoding="utf-8")
    return target


def _write_trace(trace: TransformTrace, target: Optional[Path]) -> None:
    if target is None:
        return
    target.write_text(trace.to_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Wrote trace with {len(trace)} steps to {target}")


def cmd_rho(args) -> int:
    graph = read_graph(args.file)
    result = spectral_radius(graph, args.tol)
    schema = PerronSchema(**result.to_dict())
    _emit(
        args,
        [
            f"rho {result.rho:.12f}",
            f"residual {result.residual:.3e}",
            f"iterations {result.iterations}",
        ],
        schema.model_dump(),
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    graph = read_graph(args.file)
    schema = ClassificationSchema(
        n=graph.n,
        m=graph.m,
        connected=is_connected(graph),
        cactus=is_cactus(graph),
        unicyclic=is_unicyclic(graph),
        odd_cycle=is_odd_cycle_graph(graph),
        max_edge_cactus=is_max_edge_cactus(graph),
        edge_maximal_cactus=is_edge_maximal_cactus(graph),
        t=t_count(graph),
        max_degree=graph.max_degree,
    )
    values = schema.model_dump()
    lines = [
        f"{key}={str(value).lower() if isinstance(value, bool) else value}"
        for key, value in values.items()
    ]
    _emit(args, lines, values)
    return EXIT_OK


def cmd_switch(args) -> int:
    graph = read_graph(args.file)
    try:
        moved = [int(s) for s in args.s.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"--s must be comma-separated integers, got {args.s!r}")
    before = spectral_radius(graph, args.tol)
    result = sigma_switch(graph, args.u, args.v, moved)
    after = spectral_radius(result, args.tol)
    ordering = compare_results(after, before, args.tol)
    write_graph(result, args.output)
    print(
        f"rho_before {before.rho:.12f} rho_after {after.rho:.12f} ({ordering.value})",
        file=sys.stderr,
    )
    return EXIT_OK


def _run_ascent(args, run) -> int:
    graph = read_graph(args.file)
    try:
        trace = run(graph)
    except (MonotonicityViolation, ClosureViolation) as e:
        failing = getattr(e, "after", None) or getattr(e, "graph", None) or graph
        written = _write_counterexample(failing, args.counterexample_dir, args.command)
        logger.error(f"{e}")
        print(f"counterexample: {written}", file=sys.stderr)
        return EXIT_VERIFICATION
    _write_trace(trace, args.trace)
    write_graph(trace.final, args.output)
    print(f"steps {len(trace)} monotone {str(trace.is_monotone()).lower()}", file=sys.stderr)
    return EXIT_OK


def cmd_maximize(args) -> int:
    return _run_ascent(
        args,
        lambda g: maximize_cactus(g, args.tol, connect_components=args.connect_components),
    )


def cmd_ascent(args) -> int:
    return _run_ascent(args, lambda g: unicyclic_ascent(g, args.tol))


def cmd_family(args) -> int:
    graph = FAMILIES[args.name](args.n)
    write_graph(graph, args.output, graph6=args.graph6)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    graph_class = GraphClass.parse(args.graph_class)
    if args.out == "graphs":
        for graph in enumerate_class(args.n, graph_class, jobs=args.jobs):
            sys.stdout.write(to_graph6(graph) + "\n")
        sys.stdout.flush()
        return EXIT_OK
    report = class_report(args.n, graph_class, jobs=args.jobs, tol=args.tol)
    if args.out == "csv":
        write_csv([report], sys.stdout)
    else:
        print(reports_to_json([report]))
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else get_settings().seed
    try:
        if args.graph_class == "switch":
            summary = verify_switch_soundness(
                cases=args.samples or 500, seed=seed, tol=args.tol
            )
            _emit(args, [f"switch {summary.passed}/{summary.cases} GREATER"], summary.to_dict())
            return EXIT_OK
        if args.graph_class == "merge":
            summary = verify_merge_reduces_t(cases=args.samples or 100, seed=seed, tol=args.tol)
            _emit(
                args,
                [f"merge {summary.passed}/{summary.cases} cacti, {summary.steps} merges"],
                summary.to_dict(),
            )
            return EXIT_OK
        if args.n is None:
            raise UsageError(f"verify --class {args.graph_class} needs --n")
        if args.graph_class == "odd-implies-cactus":
            verify_odd_cycle_implies_cactus(args.n, jobs=args.jobs)
            _emit(args, [f"odd-implies-cactus n={args.n} confirmed"], {"n": args.n, "ok": True})
            return EXIT_OK
        report = verify_extremal(
            args.n, GraphClass.parse(args.graph_class), jobs=args.jobs, tol=args.tol
        )
    except TheoremViolation as e:
        written = _write_counterexample(e.graph, args.counterexample_dir, args.graph_class)
        logger.error(f"{e}")
        if written is not None:
            print(f"counterexample: {written}", file=sys.stderr)
        return EXIT_VERIFICATION

    if args.format == "json":
        print(reports_to_json([report]))
    else:
        write_csv([report], sys.stdout)
    return EXIT_OK


COMMANDS = {
    "rho": cmd_rho,
    "classify": cmd_classify,
    "switch": cmd_switch,
    "maximize": cmd_maximize,
    "ascent": cmd_ascent,
    "family": cmd_family,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return int(e.code or 0)

    level = args.log_level or get_settings().log_level
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        return COMMANDS[args.command](args)
    except ConvergenceError as e:
        logger.error(f"{e}")
        return EXIT_CONVERGENCE
    except UsageError as e:
        print(f"spext: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        print(f"spext: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
