"""Command line: ``parallelo {analyze,sweep,d4,oracle-crosscheck}``.

Exit status 0 when every case passes, 1 when some case fails, 2 for bad
usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import d4, report
from .zonograph import GraphError, parse_graph

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph_arg(source: str):
    # a path to a file holding the graph, or the graph itself
    text = _read_text(source) if Path(source).is_file() else source
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parallelo", description="Gain-cycle generation checks for four-dimensional parallelohedra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="facets, belts, Venkov graph and verdict for one graph")
    a.add_argument("--graph", required=True, help='"n=5; edges=1-2,2-3,..." or JSON, inline or as a file path')
    a.add_argument("--format", choices=("json", "dot", "md"), default="json")
    a.add_argument("--method", choices=("projection", "direct"), default=None)

    s = sub.add_parser("sweep", help="all connected 5-vertex graphs plus K3,3")
    s.add_argument("--format", choices=("json", "md"), default="json")

    d = sub.add_parser("d4", help="sliced D4 Delone stars")
    g = d.add_mutually_exclusive_group()
    g.add_argument("--config", help='JSON file {"F1": [...], "F2": [...], "F3": [...]}')
    g.add_argument("--all", action="store_true", help="every admissible slicing config")

    sub.add_parser("oracle-crosscheck", help="graph rules against the generator oracle")
    return p


def _load_config(path: str) -> d4.SlicingConfig:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    try:
        return d4.load_config(data)
    except (d4.InadmissibleError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        jobs = report.jobs_from_env()
        if args.command == "analyze":
            g = _graph_arg(args.graph)
            if args.format == "dot":
                out.write(report.analysis_dot(g))
                return EXIT_PASS
            if args.format == "md":
                out.write(report.analysis_markdown(g, args.method))
                return EXIT_PASS
            data = report.analyze(g, args.method)
            out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
            return EXIT_PASS if data["pass"] else EXIT_FAIL
        if args.command == "sweep":
            manifest = report.zonotopal_sweep(jobs)
            out.write(report.appendix_markdown(manifest) if args.format == "md" else manifest.dumps())
        elif args.command == "d4":
            configs = None if args.all else [_load_config(args.config) if args.config else d4.SlicingConfig()]
            try:
                manifest = report.d4_run(configs, jobs)
            except d4.InadmissibleError as exc:
                raise UsageError(f"inadmissible config: {exc}") from None
            out.write(manifest.dumps())
        else:
            manifest = report.oracle_crosscheck(jobs)
            out.write(manifest.dumps())
        return EXIT_PASS if manifest.passed else EXIT_FAIL
    except UsageError as exc:
        print(f"parallelo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:  # bad PARALLELO_JOBS
        print(f"parallelo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
