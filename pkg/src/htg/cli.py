"""Command-line interface: ``htg gen|construct|verify|decide|survey|export-dot``.

Exit codes: 0 success, 1 usage, 2 invalid parameters, 3 failed verification,
4 instance above the oracle cap, 5 no construction applies.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import oracle
from .constructions import THEOREMS, separate
from .core import Vertex, build_graph, export_dot, graph_json, validate
from .errors import HtgError, MismatchedFactor, Unsupported
from .factor import decode_certificate, encode_certificate


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1 instead of 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _vertex(text: str) -> Vertex:
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a vertex as i,j, got {text!r}") from None
    return Vertex(i, j)


def _n_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _pair(args: argparse.Namespace) -> tuple[Vertex, Vertex] | None:
    if args.pair is None:
        return None
    if len(args.pair) != 2:
        raise UsageError(
            f"--pair takes exactly two vertices, got {len(args.pair)}; "
            "a cubic graph has no 2-factor separating three or more vertices"
        )
    return args.pair[0], args.pair[1]


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("-m", type=int, required=True, help="number of columns")
    p.add_argument("-n", type=int, required=True, help="column length (even, >= 4)")
    p.add_argument("-l", "--ell", dest="ell", type=int, required=True, help="jump offset")


def _params(args: argparse.Namespace):
    return validate(args.m, args.n, args.ell)


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    graph = build_graph(_params(args))
    if args.dot:
        sys.stdout.write(export_dot(graph))
    elif args.json:
        print(json.dumps(graph_json(graph), separators=(",", ":")))
    else:
        print(f"{graph.params}: {graph.order} vertices, {len(graph.edges)} edges")
        for e in graph.edge_list():
            print(f"{e.a} {e.b} {e.kind.value}")
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    pair = _pair(args)
    if pair is None:
        raise UsageError("construct needs --pair i,j i,j")
    cert = separate(_params(args), *pair, theorem=args.theorem, max_order=args.max_order)
    sys.stdout.write(encode_certificate(cert))
    return 0


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_verify(args: argparse.Namespace) -> int:
    cert = decode_certificate(_read(args.file))
    x, y = cert.pair
    lengths = cert.factor.cycle_lengths()
    print(f"valid: {cert.params} cycles of length {lengths[0]} and {lengths[1]} separate {x} and {y}")
    return 0


def cmd_decide(args: argparse.Namespace) -> int:
    graph = build_graph(_params(args))
    pair = _pair(args)
    if pair is not None:
        decision = oracle.decide_pair(graph, *pair, max_order=args.max_order)
        print("separable" if decision.separable else "not separable")
        return 0
    report = oracle.decide_2sc(graph, max_order=args.max_order, mode=args.mode, jobs=args.jobs)
    if args.json:
        sys.stdout.write(oracle.report_json(report))
    else:
        verdict = "2-spanning cyclable" if report.is_2sc else "not 2-spanning cyclable"
        print(f"{graph.params}: {verdict}")
        print(f"2-factors: {report.factor_count}, with two cycles: {report.witness_counts}")
        if report.counterexample:
            x, y = report.counterexample
            print(f"counterexample: {x} {y}")
    return 0


def cmd_survey(args: argparse.Namespace) -> int:
    rows = oracle.survey(args.ell, args.m, args.n_range, max_order=args.max_order, jobs=args.jobs)
    render = oracle.survey_csv if args.csv else oracle.survey_text
    sys.stdout.write(render(args.ell, args.m, rows))
    return 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    graph = build_graph(_params(args))
    factor = None
    if args.factor:
        cert = decode_certificate(_read(args.factor))
        if cert.params != graph.params:
            raise MismatchedFactor(f"certificate is for {cert.params}, not {graph.params}")
        factor = cert.factor
    text = export_dot(graph, factor)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="htg", description="Honeycomb toroidal graphs and separating 2-factors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print HTG(m,n,l)")
    _add_params(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", help="certificate separating a pair")
    _add_params(p)
    p.add_argument("--pair", nargs="+", type=_vertex, metavar="I,J")
    p.add_argument("--theorem", choices=THEOREMS, default="auto")
    p.add_argument("--max-order", type=int, default=oracle.DEFAULT_MAX_ORDER, help="oracle fallback cap")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate file ('-' for stdin)")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decide", help="brute-force oracle")
    _add_params(p)
    p.add_argument("--pair", nargs="+", type=_vertex, metavar="I,J")
    p.add_argument("--max-order", type=int, default=oracle.DEFAULT_MAX_ORDER)
    p.add_argument("--mode", choices=("all-pairs", "base-vertex"), default="all-pairs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("survey", help="classify a range of n with the oracle")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-range", type=_n_range, required=True, metavar="A..B")
    p.add_argument("--max-order", type=int, default=oracle.DEFAULT_MAX_ORDER)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("export-dot", help="DOT drawing, optionally highlighting a certificate's factor")
    _add_params(p)
    p.add_argument("--factor", metavar="FILE")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"htg: error: {exc}", file=sys.stderr)
        return 1
    except Unsupported as exc:
        cited = f" [{exc.theorem}]" if exc.theorem else ""
        print(f"unsupported{cited}: {exc}", file=sys.stderr)
        return exc.exit_code
    except HtgError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"htg: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
