"""Command-line driver.

    hadamard-delta verify [--suite S] [--max-dim N] [--grid-denominator D] [--deep] ...
    hadamard-delta probe-discrepancy --n 1 --m 1 --alpha 0,1 -D 2
    hadamard-delta evaluate hadamard --alpha 0,2 --beta 1,2 --p 2 --q 2
    hadamard-delta enumerate 2 2

Exit status: 0 success, 1 a verification suite failed, 2 bad usage or literal.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import BadLiteral, DeltaError
from .hadamard import hadamard
from .literals import format_bary, format_map, parse_bary, parse_map, parse_rational
from .promonoidal import DayClass, KernelClass, delta, theta
from .realization import compare_on_grid, homotopy_point, standard_contraction
from .simplex import count_maps, enumerate_maps
from .verify import SUITES, SuiteConfig, probe_note, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadamard-delta",
        description="Exact checks for the Cartesian kernel, Hadamard map and contraction on the simplex category.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--max-dim", type=_natural, default=3)
    v.add_argument("--grid-denominator", type=_positive, default=4)
    v.add_argument("--deep", action="store_true", help="coherence diagrams at ordinals <= 2")
    v.add_argument("--seed", type=_natural, default=0)
    v.add_argument("--sample", type=_positive, default=None,
                   help="sample this many relation instances instead of running them all")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--counterexample-limit", type=_natural, default=10)

    p = sub.add_parser("probe-discrepancy", help="measure |H| against the straight-line contraction")
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--m", type=_natural, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("-D", "--grid-denominator", type=_positive, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("evaluate", help="evaluate one operation on literals")
    e.add_argument("kind", choices=("hadamard", "delta", "theta", "homotopy-point", "contraction"))
    for name in ("alpha", "beta", "gamma", "sx", "sy", "u", "w", "t"):
        e.add_argument(f"--{name}")
    for name in ("p", "q", "n"):
        e.add_argument(f"--{name}", type=_natural)

    n = sub.add_parser("enumerate", help="list all monotone maps [m] -> [n]")
    n.add_argument("m", type=_natural)
    n.add_argument("n", type=_natural)
    return parser


def cmd_verify(args) -> int:
    config = SuiteConfig(
        suite=args.suite,
        max_dim=args.max_dim,
        grid_denominator=args.grid_denominator,
        sample_seed=args.seed,
        format=args.format,
        counterexample_limit=args.counterexample_limit,
        deep=args.deep,
        sample=args.sample,
    )
    report = run_suite(config)
    print(report.to_json() if config.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_probe(args) -> int:
    alpha = parse_map(args.alpha, args.n)
    if alpha.source != args.m:
        raise BadLiteral(f"alpha has {len(alpha)} values, expected {args.m + 1} for m={args.m}")
    report = compare_on_grid(args.n, args.m, alpha, args.grid_denominator)
    data = report.to_dict()
    data["note"] = probe_note()
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
        return EXIT_OK
    yes = lambda b: "yes" if b else "no"
    print(f"grid points: {report.points}")
    print(f"max deviation: {report.max_deviation}")
    if report.witness is not None:
        print(f"witness: {report.witness}")
        print(f"  cellwise affine homotopy: {report.witness_affine}")
        print(f"  straight-line contraction: {report.witness_contraction}")
    print(f"vertex agreement: {yes(report.vertex_agreement)}")
    print(f"t=0/t=1 slice agreement: {yes(report.slice_agreement)}")
    print(f"note: {data['note']}")
    return EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"evaluate {args.kind} needs " + ", ".join(f"--{n}" for n in missing))


def cmd_evaluate(args) -> int:
    kind = args.kind
    if kind == "hadamard":
        _need(args, "alpha", "beta")
        result = format_map(hadamard(parse_map(args.alpha, args.p), parse_map(args.beta, args.q)))
    elif kind == "delta":
        _need(args, "alpha", "beta", "gamma")
        alpha = parse_map(args.alpha, args.p)
        beta = parse_map(args.beta, args.q)
        gamma = parse_map(args.gamma, alpha.source)
        result = format_map(delta(KernelClass(alpha, beta, gamma)))
    elif kind == "theta":
        _need(args, "sx", "sy", "gamma", "alpha", "beta")
        alpha = parse_map(args.alpha, args.p)
        beta = parse_map(args.beta, args.q)
        sx = parse_map(args.sx, alpha.source)
        sy = parse_map(args.sy, beta.source)
        gamma = parse_map(args.gamma, sx.source)
        result = format_map(theta(DayClass(KernelClass(sx, sy, gamma), alpha, beta)))
    elif kind == "homotopy-point":
        _need(args, "alpha", "beta", "u")
        alpha = parse_map(args.alpha, args.n)
        beta = parse_map(args.beta, 1)
        result = format_bary(homotopy_point(alpha, beta, parse_bary(args.u)))
    else:
        _need(args, "w", "t")
        result = format_bary(standard_contraction(parse_bary(args.w), parse_rational(args.t)))
    print(result)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    maps = enumerate_maps(args.m, args.n)
    for f in maps:
        print(format_map(f))
    assert len(maps) == count_maps(args.m, args.n)
    print(f"count: {len(maps)}")
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "probe-discrepancy": cmd_probe,
    "evaluate": cmd_evaluate,
    "enumerate": cmd_enumerate,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DeltaError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
