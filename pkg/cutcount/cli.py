# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import argparse
import json
import logging
import sys

import fsspec

from .core import SubgraphCounter, setup_logging
from .errors import BudgetExceededError, CutCountError, exit_status_for
from .patterns.catalog import build_catalog
from .report import REPORT_FORMATS, read_report, write_report, emit_trends
from .utils import __version__

logger = logging.getLogger("cutcount")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutcount",
        description="Exact counts of every 3, 4 and 5-vertex pattern in a graph.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="log to stderr at this level",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="count patterns in an edge list")
    count.add_argument("input", help="edge list path or fsspec URL; compression inferred from the suffix")
    count.add_argument("--size", type=int, choices=(3, 4, 5), default=5)
    count.add_argument("--format", choices=REPORT_FORMATS, default="json")
    count.add_argument("-o", "--output", help="write the report here instead of stdout")
    count.add_argument("--num-vertices", type=int, help="vertex count, to include isolated vertices")
    count.add_argument("--header", action="store_true", help='first non-comment line is "n m"')
    count.add_argument("--profiles", choices=("vertex", "edge"))
    count.add_argument("--oracle-check", action="store_true", help="verify every count by brute force")
    count.add_argument("--oracle-budget", type=int, help="largest number of subsets the check may enumerate")
    count.add_argument("--memory-budget", type=int, help="bytes the triangle lists may use")
    count.add_argument("--trends", action="store_true")
    count.add_argument("--threads", type=int, help="worker processes")
    count.add_argument("--timings", action="store_true", help="include stage timings in the report")

    catalog = commands.add_parser("catalog", help="describe the pattern atlas as JSON")
    catalog.add_argument("-o", "--output")

    trends = commands.add_parser("trends", help="trend ratios of a saved report")
    trends.add_argument("report", help="JSON or CSV report written by 'count'")
    trends.add_argument("-o", "--output")
    return parser


def _emit(text: str, output=None):
    if output is None:
        sys.stdout.write(text)
        return
    with fsspec.open(output, mode="wt") as f:
        f.write(text)


def _write(report, args):
    if args.output:
        write_report(report, args.output, args.format)
    else:
        _emit(report.dumps(args.format))


def run_count(args):
    counter = SubgraphCounter(
        memory_budget=args.memory_budget,
        oracle_budget=args.oracle_budget,
        workers=args.threads,
    )
    g = counter.load(args.input, num_vertices=args.num_vertices, header=args.header)
    try:
        report = counter.count(
            g,
            size=args.size,
            profiles=args.profiles,
            oracle_check=args.oracle_check,
            trends=args.trends,
            timings=args.timings,
        )
    except BudgetExceededError as e:
        # sizes finished before the refusal
        if e.report is not None:
            _write(e.report, args)
        raise
    _write(report, args)
    if report.oracle_check:
        print(f"oracle-check: {report.oracle_check}", file=sys.stderr)
    return report


def run_catalog(args):
    _emit(json.dumps(build_catalog().to_dict(), indent=2) + "\n", args.output)


def run_trends(args):
    _emit(json.dumps(emit_trends(read_report(args.report)), indent=2) + "\n", args.output)


COMMANDS = {"count": run_count, "catalog": run_catalog, "trends": run_trends}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        setup_logging(args.log_level)
    try:
        COMMANDS[args.command](args)
    except (CutCountError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"cutcount: error: {e}", file=sys.stderr)
        return exit_status_for(e)
    return 0


if __name__ == "__main__":
    sys.exit(main())
