"""Command-line front end.

    qrdet jacobi A N
    qrdet check THEOREM [--n N] [--c C] [--d D] [--p P] [--k K] [--seed S]
    qrdet sweep THEOREM [--n RANGE] ... [--sampling exhaustive|random:COUNT] [--seed S]
                        [--jobs J] [--out PATH] [--format jsonl|csv] [--timing]
    qrdet selftest [--jobs J]

Exit codes: 0 all pass, 1 any FAIL, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .numtheory import jacobi
from .sweep import CHECKS, SweepSpec, default_jobs, iter_records, parse_range, write_report
from .verify import PreconditionError, Status

PARAM_FLAGS = ("n", "c", "d", "p", "k")


class UsageError(Exception):
    pass


def _parse_sampling(text: str):
    if text == "exhaustive":
        return "exhaustive"
    kind, _, count = text.partition(":")
    if kind != "random" or not count.isdigit():
        raise UsageError(f"--sampling must be 'exhaustive' or 'random:COUNT', got {text!r}")
    return ("random", int(count))


def _jobs(args) -> int:
    # Flag beats QRDET_JOBS, which beats the CPU count.
    return args.jobs if args.jobs is not None else default_jobs()


def cmd_jacobi(args) -> int:
    try:
        print(jacobi(args.a, args.n))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0


def cmd_check(args) -> int:
    info = CHECKS[args.theorem]
    values = []
    for name in info.params:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"check {args.theorem} needs --{name}")
        values.append(v)
    try:
        rec = info.func(*values)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from exc
    print(json.dumps(rec.to_dict(timing=True)))
    return 1 if rec.status is Status.FAIL else 0


def cmd_sweep(args) -> int:
    info = CHECKS[args.theorem]
    sampling = _parse_sampling(args.sampling)
    ranges = {}
    try:
        for name in PARAM_FLAGS:
            text = getattr(args, name)
            if text is not None:
                if name not in info.params:
                    raise UsageError(f"sweep {args.theorem} does not take --{name}")
                ranges[name] = parse_range(text)
        sampler_seed = None
        if args.seed is not None:
            if sampling == "exhaustive":
                if "seed" not in info.params:
                    raise UsageError(f"exhaustive sweep {args.theorem} does not take --seed")
                ranges["seed"] = parse_range(args.seed)
            else:
                sampler_seed = int(args.seed)
        spec = SweepSpec(args.theorem, ranges, sampling, sampler_seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    try:
        fh = open(args.out, "w", newline="") if args.out else sys.stdout
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    try:
        summary = write_report(iter_records(spec, _jobs(args)), fh, args.format, args.timing)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    finally:
        if fh is not sys.stdout:
            fh.close()
    # Keep the summary off stdout when the report itself goes there.
    print(summary.line(), file=sys.stdout if args.out else sys.stderr)
    return 1 if summary.failed else 0


def cmd_selftest(args) -> int:
    return 0 if acceptance.run_all(_jobs(args)) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrdet", description="Verify determinant identities involving quadratic residues.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jacobi", help="print the Jacobi symbol (a/n)")
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("check", help="run one checker at one parameter point")
    p.add_argument("theorem", choices=sorted(CHECKS))
    for name in PARAM_FLAGS + ("seed",):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="run a checker over a parameter range")
    p.add_argument("theorem", choices=sorted(CHECKS))
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}", metavar="RANGE", help="a, a..b, a..b:step or comma list")
    p.add_argument(
        "--seed",
        help="sampler seed for random sampling; for thm31/eqp exhaustive sweeps, the case seed range",
    )
    p.add_argument("--sampling", default="exhaustive", help="exhaustive (default) or random:COUNT")
    p.add_argument("--jobs", type=int, help="worker processes (default: $QRDET_JOBS or CPU count)")
    p.add_argument("--out", help="report path (default: stdout)")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--timing", action="store_true", help="include elapsed_us; reports are then not reproducible")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qrdet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
