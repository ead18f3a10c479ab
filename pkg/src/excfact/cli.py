"""Command-line front end.

Subcommands: ``index`` (excessive [l,m]-index of a graph file), ``analyze``
(compatibility / coherence reports), ``sweep`` (main path vs brute-force
oracle over small graphs), ``render`` (DOT drawing of a covering).  Output
is JSON (or JSON lines / DOT) on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 input error, 2 the requested index is infinite,
3 time budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import (
    coherence_report,
    coherence_report_to_json,
    compatibility_report,
    compatibility_report_to_json,
)
from .budget import time_budget
from .errors import BudgetExceededError, FormatError, ParameterError, PreconditionError
from .excessive import exc_algorithm, excessive_lm_index, index_result_to_json
from .graphs import Covering, SimpleGraph, covering_from_json, parse_edge_list, parse_graph6
from .excessive import covering_violations
from .oracle import SweepConfig, min_cover_bruteforce, small_graph_sweep

FORMAT_VERSION = 1

_PALETTE = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_graph(path_text: str) -> SimpleGraph:
    path = Path(path_text)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    if path.suffix == ".g6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _parse_m(token: str, l: int, edge_count: int) -> int:
    if token == "inf":
        # matchings never exceed the edge count, so this cap is exact;
        # max() keeps the window nonempty on edgeless graphs
        return max(edge_count, l)
    try:
        return int(token)
    except ValueError:
        raise ParameterError(f"--m expects an integer or 'inf', got {token!r}") from None


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _cmd_index(args) -> int:
    g = _load_graph(args.graph)
    if args.l < 1:
        raise ParameterError("--l must be at least 1")
    m = _parse_m(args.m, args.l, g.edge_count)
    try:
        with time_budget(args.budget_ms):
            if args.method == "formula":
                result = excessive_lm_index(g, args.l, m)
            elif args.method == "exc":
                result = exc_algorithm(g, args.l, m)
            else:
                result = min_cover_bruteforce(g, args.l, m)
    except BudgetExceededError:
        d = g.max_degree()
        _emit(
            {
                "format_version": FORMAT_VERSION,
                "outcome": "budget_exceeded",
                "chromatic_index_bracket": [d, d + 1],
            }
        )
        print("time budget exceeded; no exact value reported", file=sys.stderr)
        return 3
    payload = index_result_to_json(g, args.l, m, result, include_witness=args.witness)
    _emit({"format_version": FORMAT_VERSION, **payload})
    return 0 if result.finite else 2


def _cmd_analyze(args) -> int:
    if not args.compat and not args.coherence:
        raise ParameterError("nothing to do: pass --compat and/or --coherence")
    g = _load_graph(args.graph)
    out: dict = {"format_version": FORMAT_VERSION}
    with time_budget(args.budget_ms):
        if args.compat:
            out["compatibility"] = compatibility_report_to_json(
                compatibility_report(g, args.max_m)
            )
        if args.coherence:
            if args.l is None or args.m is None:
                raise ParameterError("--coherence requires --l and --m")
            out["coherence"] = coherence_report_to_json(coherence_report(g, args.l, args.m))
    _emit(out)
    return 0


def _cmd_sweep(args) -> int:
    config = SweepConfig(max_vertices=args.max_vertices, max_m=args.max_m, seed=args.seed)
    records = small_graph_sweep(config)
    for record in records:
        print(json.dumps(record))
    return 0 if not records else 1


def _cmd_render(args) -> int:
    g = _load_graph(args.graph)
    try:
        obj = json.loads(Path(args.witness).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read witness JSON: {exc}") from exc
    if isinstance(obj, dict) and "witness" in obj:
        obj = obj["witness"]
    covering = covering_from_json(obj)
    problems = covering_violations(g, covering, 0, max(g.edge_count, 1))
    if problems:
        for line in problems:
            print(f"invalid witness: {line}", file=sys.stderr)
        return 1
    print(_render_dot(g, covering))
    return 0


def _render_dot(g: SimpleGraph, covering: Covering) -> str:
    membership: dict = {e: [] for e in g.sorted_edges()}
    for idx, matching in enumerate(covering.matchings, start=1):
        for e in matching.edges:
            membership[e].append(idx)
    lines = [
        "graph covering {",
        f"  // format_version {FORMAT_VERSION}",
        "  node [shape=circle];",
    ]
    lines.extend(f"  {v};" for v in range(g.vertex_count))
    for (u, v), ids in membership.items():
        colour = _PALETTE[(ids[0] - 1) % len(_PALETTE)]
        label = ",".join(str(i) for i in ids)
        style = ', style=bold' if len(ids) > 1 else ""
        lines.append(f'  {u} -- {v} [label="{label}", color="{colour}"{style}];')
    lines.append("}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="excfact", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    index = sub.add_parser("index", help="compute an excessive [l,m]-index")
    index.add_argument("--graph", required=True, help="graph file (.g6 graph6, otherwise edge list)")
    index.add_argument("--l", type=int, required=True)
    index.add_argument("--m", required=True, help="integer or 'inf'")
    index.add_argument("--method", choices=["formula", "exc", "oracle"], default="formula")
    index.add_argument("--budget-ms", type=int, default=10_000)
    index.add_argument("--witness", action="store_true", help="include the witness covering")
    index.set_defaults(func=_cmd_index)

    analyze = sub.add_parser("analyze", help="compatibility / coherence reports")
    analyze.add_argument("--graph", required=True)
    analyze.add_argument("--compat", action="store_true")
    analyze.add_argument("--max-m", type=int, default=5)
    analyze.add_argument("--coherence", action="store_true")
    analyze.add_argument("--l", type=int)
    analyze.add_argument("--m", type=int)
    analyze.add_argument("--budget-ms", type=int, default=10_000)
    analyze.set_defaults(func=_cmd_analyze)

    sweep = sub.add_parser("sweep", help="cross-check the main path against the oracle")
    sweep.add_argument("--max-vertices", type=int, default=4)
    sweep.add_argument("--max-m", type=int, default=4)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.set_defaults(func=_cmd_sweep)

    render = sub.add_parser("render", help="DOT drawing of a covering witness")
    render.add_argument("--graph", required=True)
    render.add_argument("--witness", required=True, help="JSON file with the covering")
    render.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except (FormatError, ParameterError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
