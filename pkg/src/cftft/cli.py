"""Command-line entry point: ``cftft {verify,count,bench,compare}``."""
from __future__ import annotations

import argparse
import sys

from . import bench
from .errors import BadLength, NoRootOfUnity, NotPrime
from .ring import DEFAULT_PRIME, DEFAULT_TWO_ADICITY, ring_context
from .transform import SplitPolicy


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cftft", description=__doc__)
    ap.add_argument("--modulus", type=int, default=DEFAULT_PRIME,
                    help="odd prime p (default %(default)s)")
    ap.add_argument("--two-adicity", type=int, default=DEFAULT_TWO_ADICITY,
                    help="m such that the ring has a principal 2^m-th root of unity")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="exhaustive oracle, inversion and count-bound suites")
    v.add_argument("--max-ell", type=int, default=6)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--samples", type=int, default=8, help="random draws per (L, z)")

    c = sub.add_parser("count", help="base-case counts against their bounds for n = 1..L")
    c.add_argument("--length", type=int, required=True)
    c.add_argument("--policy", choices=[p.value for p in SplitPolicy], default="balanced")

    def sweep(sp):
        sp.add_argument("--min", type=int, default=512)
        sp.add_argument("--max", type=int, default=16384)
        sp.add_argument("--step-pct", type=float, default=5)
        sp.add_argument("--trials", type=int, default=3)
        sp.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("bench", help="time multiplication over a geometric length grid")
    sweep(b)
    b.add_argument("--policy", choices=[p.value for p in SplitPolicy], default="balanced")
    cm = sub.add_parser("compare", help="time both split policies on the same grid")
    sweep(cm)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        ctx = ring_context(args.modulus, args.two_adicity)
        if args.command == "verify":
            return bench.cmd_verify(ctx, args.max_ell, args.seed, args.samples)
        if args.command == "count":
            bench.cmd_count(ctx, args.length, SplitPolicy(args.policy))
        elif args.command == "bench":
            bench.cmd_bench(ctx, args.min, args.max, args.step_pct, args.trials,
                            SplitPolicy(args.policy), args.seed)
        else:
            bench.cmd_compare(ctx, args.min, args.max, args.step_pct, args.trials, args.seed)
    except (bench.UsageError, BadLength, NotPrime, NoRootOfUnity, ValueError) as e:
        ap.error(str(e))
    return 0


if __name__ == "__main__":
    sys.exit(main())
