#!/usr/bin/env python3
"""
Command-line surface of the spectral density toolkit.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from pydantic import ValidationError

from .config import load_settings
from .errors import SpecDensError
from .forest import budget_aligned, check_split, split_tree
from .graph.core import stats
from .graph.io import load_graph, load_voltage_graph
from .graph.random_graphs import Xorshift64Star, random_connected_multigraph
from .spectral.bounds import report_to_csv, verify_main_bound
from .spectral.laplacian import sdf, spanning_tree_count
from .towers.report import report_to_csv as tower_csv
from .towers.report import tower_report, verify_uniform_estimate
from .utils.logging import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so run() owns the exit code."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _moduli(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"moduli must be comma-separated integers, got {text!r}") from None
    return values


def _fmt(value: float) -> str:
    return f"{value:.15g}"


def build_parser() -> argparse.ArgumentParser:
    settings = load_settings()
    parser = _Parser(prog="specdens", description="Spectral density functions of finite multigraphs")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cmd = commands.add_parser("stats", help="degree, volume, diameter and Betti numbers")
    cmd.add_argument("file", type=Path)

    cmd = commands.add_parser("sdf", help="jump points of the first spectral density function")
    cmd.add_argument("file", type=Path)
    cmd.add_argument("--csv", action="store_true", help="emit CSV instead of key=value lines")

    cmd = commands.add_parser("bound-check", help="verify F_1(lam) - F_1(0) <= 2 |E| deg lam")
    cmd.add_argument("file", type=Path)
    cmd.add_argument("--grid", type=int, default=settings.grid_size)
    cmd.add_argument("--csv", type=Path, default=None, help="write the sample table to this file")

    cmd = commands.add_parser("split-tree", help="split a tree into pieces of bounded size")
    cmd.add_argument("file", type=Path)
    cmd.add_argument("--budget", type=float, required=True)

    cmd = commands.add_parser("spanning-trees", help="exact number of spanning trees")
    cmd.add_argument("file", type=Path)

    cmd = commands.add_parser("tower", help="determinant approximation along a covering tower")
    cmd.add_argument("file", type=Path)
    cmd.add_argument("--moduli", type=_moduli, action="append", required=True, help="n1,...,nd; repeat per level")
    cmd.add_argument("--oracle-nodes", type=int, default=None)
    cmd.add_argument("--grid", type=int, default=settings.grid_size)
    cmd.add_argument("--tol", type=float, default=settings.tower_tolerance)
    cmd.add_argument("--csv", type=Path, default=None, help="write the CSV here instead of stdout")

    cmd = commands.add_parser("suite", help="main bound on seeded random connected multigraphs")
    cmd.add_argument("--count", type=int, default=500)
    cmd.add_argument("--seed", type=int, default=settings.seed)
    cmd.add_argument("--grid", type=int, default=settings.grid_size)
    cmd.add_argument("--max-vertices", type=int, default=12)
    cmd.add_argument("--max-edges", type=int, default=30)
    return parser


def cmd_stats(args, out: TextIO) -> int:
    st = stats(load_graph(args.file))
    out.write(f"vertices={st.vertex_count}\n")
    out.write(f"edges={st.edge_count}\n")
    out.write(f"degree={st.max_degree}\n")
    out.write(f"volume={st.volume}\n")
    out.write(f"diameter={'unbounded' if st.diameter is None else st.diameter}\n")
    out.write(f"b0={st.b0}\n")
    out.write(f"b1={st.b1}\n")
    out.write(f"degrees={','.join(map(str, st.degree_per_vertex))}\n")
    return EXIT_OK


def cmd_sdf(args, out: TextIO) -> int:
    step = sdf(load_graph(args.file))
    if args.csv:
        out.write("jump,value\n")
        out.write(f"0,{step.at_zero}\n")
        for point, value in zip(step.jump_points, step.values[1:]):
            out.write(f"{_fmt(point)},{value}\n")
    else:
        out.write(f"F(0)={step.at_zero}\n")
        for point, value in zip(step.jump_points, step.values[1:]):
            out.write(f"jump={_fmt(point)} value={value}\n")
    return EXIT_OK


def cmd_bound_check(args, out: TextIO) -> int:
    report = verify_main_bound(load_graph(args.file), args.grid)
    if args.csv is not None:
        args.csv.write_text(report_to_csv(report), encoding="ascii", newline="\n")
    out.write(f"edges={report.edge_count}\n")
    out.write(f"degree={report.max_degree}\n")
    out.write(f"connected={'true' if report.connected else 'false'}\n")
    out.write(f"samples={len(report.lambda_grid)}\n")
    out.write(f"max_gap={max(report.sdf_gap, default=0)}\n")
    out.write(f"zero_threshold={_fmt(report.fine_zero_threshold)}\n")
    out.write(f"linear_threshold={_fmt(report.fine_linear_threshold)}\n")
    out.write(f"violations={len(report.violations)}\n")
    for violation in report.violations:
        out.write(f"violation {violation.assertion} lambda={_fmt(violation.lam)} gap={violation.gap} bound={_fmt(violation.bound)}\n")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_split_tree(args, out: TextIO) -> int:
    tree = load_graph(args.file)
    split = split_tree(tree, args.budget)
    checks = check_split(tree, split)
    out.write(f"removed={','.join(map(str, split.removed_edges))}\n")
    for number, (edges, vertices) in enumerate(zip(split.components, split.component_vertices), start=1):
        out.write(f"component {number}: edges={','.join(map(str, edges))} vertices={','.join(map(str, vertices))}\n")
    out.write(f"pieces={split.piece_count}\n")
    for name, holds in checks.items():
        out.write(f"{name}={'true' if holds else 'false'}\n")
    out.write(f"budget_aligned={'true' if budget_aligned(tree, args.budget) else 'false'}\n")
    unconditional = ("partition", "trees", "relaxed_upper_bound", "count_bound", "lower_bound")
    return EXIT_OK if all(checks[name] for name in unconditional) else EXIT_FAILED


def cmd_spanning_trees(args, out: TextIO) -> int:
    out.write(f"{spanning_tree_count(load_graph(args.file))}\n")
    return EXIT_OK


def cmd_tower(args, out: TextIO) -> int:
    vg = load_voltage_graph(args.file)
    report = tower_report(vg, args.moduli, args.grid, args.oracle_nodes)
    violations = verify_uniform_estimate(report)
    text = tower_csv(report)
    if args.csv is not None:
        args.csv.write_text(text, encoding="ascii", newline="\n")
    else:
        out.write(text)
    last_error = report.abs_errors()[-1]
    if violations:
        logger.warning("Uniform estimate violated", violations=len(violations))
        return EXIT_FAILED
    if not last_error < args.tol:
        logger.warning("Last level too far from the oracle", error=last_error, tolerance=args.tol)
        return EXIT_FAILED
    return EXIT_OK


def cmd_suite(args, out: TextIO) -> int:
    rng = Xorshift64Star(args.seed)
    failures = 0
    for index in range(args.count):
        graph = random_connected_multigraph(rng, args.max_vertices, args.max_edges)
        report = verify_main_bound(graph, args.grid)
        if not report.passed:
            failures += 1
            out.write(f"graph {index}: {len(report.violations)} violations\n")
    out.write(f"graphs={args.count}\nseed={args.seed}\nfailures={failures}\n")
    return EXIT_OK if failures == 0 else EXIT_FAILED


COMMANDS = {
    "stats": cmd_stats,
    "sdf": cmd_sdf,
    "bound-check": cmd_bound_check,
    "split-tree": cmd_split_tree,
    "spanning-trees": cmd_spanning_trees,
    "tower": cmd_tower,
    "suite": cmd_suite,
}


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Parse argv, dispatch, and return the exit code."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE

    settings = load_settings()
    setup_logging(level=args.log_level or settings.log_level, json_output=settings.json_logs)

    try:
        return COMMANDS[args.command](args, out)
    except (SpecDensError, ValidationError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
