"""Command-line front end.

Every command prints one JSON result document on stdout.  Exit codes:
0 success, 1 bad input, 2 a checked property failed (including an invalid
histogram and a failed realization), 3 degenerate input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .depth import depth_histogram, flat_depth, tukey_depth
from .errors import DegeneracyError, InputError, RealizationFailed, RejectionLimitError
from .histograms import (
    count_total,
    count_with_max_depth,
    enumerate_valid,
    max_depth_bound,
    validate_point_histogram,
)
from .io import labeled_histogram, read_document, result_document, write_document
from .realizer import realize

EXIT_OK, EXIT_INPUT, EXIT_PROPERTY, EXIT_DEGENERATE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _histogram_literal(text: str) -> list[int]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad histogram literal {text!r}") from exc
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise InputError("a histogram is a list of integers such as [5,1,1]")
    if any(x < 0 for x in value):
        raise InputError("histogram entries must be nonnegative")
    return value


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"--{name} is required for '{args.command}'")


def cmd_depth(args):
    _need(args, "input")
    P, _ = read_document(args.input)
    if (args.point is None) == (args.flat is None):
        raise InputError("give exactly one of --point and --flat")
    if args.point is not None:
        target = {"point": args.point}
        value = tukey_depth(P, args.point)
    else:
        target = {"flat": args.flat}
        value = flat_depth(P, args.flat, args.mode)
    inputs = {"input": args.input, "mode": args.mode, **target}
    return EXIT_OK, result_document("depth", inputs, {"depth": value})


def cmd_histogram(args):
    _need(args, "input")
    P, _ = read_document(args.input)
    h = depth_histogram(P, args.k, args.mode)
    outputs = {"histogram": h.as_list(), "by_depth": labeled_histogram(h.entries), "n": len(P)}
    inputs = {"input": args.input, "k": args.k, "mode": args.mode}
    return EXIT_OK, result_document("histogram", inputs, outputs)


def cmd_validate(args):
    _need(args, "histogram", "dim")
    h = _histogram_literal(args.histogram)
    ok = validate_point_histogram(h, args.dim)
    outputs = {"valid": ok, "by_depth": labeled_histogram(h)}
    if sum(h):
        outputs["max_depth_bound"] = max_depth_bound(sum(h), args.dim)
    doc = result_document("validate", {"histogram": h, "dim": args.dim}, outputs, "ok" if ok else "invalid")
    return (EXIT_OK if ok else EXIT_PROPERTY), doc


def cmd_count(args):
    _need(args, "n", "dim")
    inputs = {"n": args.n, "dim": args.dim}
    if args.l is None:
        outputs = {"count": str(count_total(args.n, args.dim))}
    else:
        inputs["l"] = args.l
        outputs = {"count": str(count_with_max_depth(args.n, args.dim, args.l))}
    return EXIT_OK, result_document("count", inputs, outputs)


def cmd_enumerate(args):
    _need(args, "n", "dim")
    hs = enumerate_valid(args.n, args.dim)
    outputs = {"count": str(len(hs)), "histograms": [list(h) for h in hs]}
    return EXIT_OK, result_document("enumerate", {"n": args.n, "dim": args.dim}, outputs)


def cmd_realize(args):
    _need(args, "histogram", "dim")
    h = _histogram_literal(args.histogram)
    P, trace = realize(h, args.dim, args.seed)
    outputs = {"histogram": depth_histogram(P).as_list(), "n": len(P), "steps": len(trace.steps)}
    if args.output:
        write_document(args.output, P, {"seed": args.seed, "histogram": list(h)})
        outputs["output"] = args.output
    else:
        outputs["points"] = [[str(c) for c in p] for p in P]
    if args.trace:
        outputs["trace"] = trace.report().splitlines()
    inputs = {"histogram": h, "dim": args.dim, "seed": args.seed}
    return EXIT_OK, result_document("realize", inputs, outputs)


def cmd_check(args):
    names = list(checks.SUITES) if args.suite in (None, "all") else [args.suite]
    for name in names:
        if name not in checks.SUITES:
            raise InputError(f"unknown suite {name!r}; choose from {', '.join(checks.SUITES)}")
    sets = None
    if args.input:
        sets = [read_document(args.input)[0]]
    report = {}
    passed = True
    for name in names:
        results = checks.run_suite(name, sets, args.seed)
        report[name] = [r.as_dict() for r in results]
        passed &= all(r.passed for r in results)
    inputs = {"suite": args.suite or "all", "input": args.input, "seed": args.seed}
    doc = result_document("check", inputs, {"suites": report}, "pass" if passed else "fail")
    return (EXIT_OK if passed else EXIT_PROPERTY), doc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tukeydepth", description="Exact Tukey depth histograms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *flags):
        if "input" in flags:
            p.add_argument("--input", help="point-set document (JSON)")
        if "dim" in flags:
            p.add_argument("--dim", "-d", type=int)
        if "mode" in flags:
            p.add_argument("--mode", choices=["affine", "convex"], default="affine")
        if "seed" in flags:
            p.add_argument("--seed", type=int, default=0)
        return p

    p = common(sub.add_parser("depth", help="depth of a point or flat"), "input", "mode")
    p.add_argument("--point", type=int)
    p.add_argument("--flat", type=int, nargs="+")
    p.set_defaults(func=cmd_depth)

    p = common(sub.add_parser("histogram", help="depth histogram of k-flats"), "input", "mode")
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_histogram)

    p = common(sub.add_parser("validate", help="test a candidate point histogram"), "dim")
    p.add_argument("histogram", nargs="?")
    p.set_defaults(func=cmd_validate)

    for name, func, help_ in (
        ("count", cmd_count, "number of feasible histograms"),
        ("enumerate", cmd_enumerate, "list feasible histograms"),
    ):
        p = common(sub.add_parser(name, help=help_), "dim")
        p.add_argument("--n", type=int)
        if name == "count":
            p.add_argument("--l", type=int)
        p.set_defaults(func=func)

    p = common(sub.add_parser("realize", help="build a set with a given histogram"), "dim", "seed")
    p.add_argument("histogram", nargs="?")
    p.add_argument("--output")
    p.add_argument("--trace", action="store_true", help="include the construction trace")
    p.set_defaults(func=cmd_realize)

    p = common(sub.add_parser("check", help="run property suites"), "input", "seed")
    p.add_argument("--suite", choices=[*checks.SUITES, "all"])
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "command") and v is not None}
    try:
        code, doc = args.func(args)
    except DegeneracyError as exc:
        code, doc = EXIT_DEGENERATE, result_document(args.command, echo, {"error": str(exc)}, "degenerate")
    except RejectionLimitError as exc:
        code, doc = EXIT_DEGENERATE, result_document(args.command, echo, {"error": str(exc)}, "degenerate")
    except RealizationFailed as exc:
        code, doc = EXIT_PROPERTY, result_document(args.command, echo, {"error": str(exc)}, "failed")
    except InputError as exc:
        code, doc = EXIT_INPUT, result_document(args.command, echo, {"error": str(exc)}, "error")
    sys.stdout.write(doc)
    return code


if __name__ == "__main__":
    sys.exit(main())
