#!/usr/bin/env python3
"""Sweep the kernel benchmark over matrix sizes and print a table.

The speedup should grow roughly linearly in n: the naive oracle does
2n^3 ring multiplications against the kernel's 2n^2.
"""

import argparse
import json

from minortrace import run_bench
from minortrace.serialize import dumps, ring_to_obj


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="32,64,128,256",
                        help="comma-separated matrix orders")
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", action="store_true", help="emit JSON lines instead")
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",") if s]
    if not args.json:
        print(f"{'n':>6} {'naive (s)':>12} {'fast (s)':>12} {'speedup':>9}")
    for n in sizes:
        r = run_bench(n, reps=args.reps, seed=args.seed)
        if args.json:
            print(dumps({
                "n": r.n,
                "ring": ring_to_obj(r.ring),
                "reps": r.reps,
                "naive_median_s": r.naive_median,
                "fast_median_s": r.fast_median,
                "speedup": r.speedup,
            }))
        else:
            print(f"{r.n:>6} {r.naive_median:>12.5f} {r.fast_median:>12.5f} {r.speedup:>8.1f}x")


if __name__ == "__main__":
    main()
