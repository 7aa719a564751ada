"""Timing comparison of the two row-reduction kernels.

Runs the same seeded workload through the compiled extension (when
built) and the pure-Python fallback, and prints per-kernel totals.
The workload mutates its input, so every call gets a fresh copy and
both kernels see identical rows.

Usage: python benchmarks/bench_kernel.py [--ncols 8] [--nrows 8]
       [--count 300] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time

from orthoql import _kernel_py

try:
    from orthoql import _kernel
except ImportError:
    _kernel = None


def make_workload(rng: random.Random, nrows: int, ncols: int, count: int):
    cases = []
    for _ in range(count):
        cases.append(
            [[rng.randint(-9, 9) for _ in range(2 * ncols)] for _ in range(nrows)]
        )
    return cases


def run(kernel, cases, ncols: int) -> tuple[float, int]:
    total = 0.0
    checksum = 0
    for rows in cases:
        work = [row[:] for row in rows]
        start = time.perf_counter()
        reduced, pivots = kernel.rref_gauss(work, ncols)
        total += time.perf_counter() - start
        checksum ^= len(pivots)
    return total, checksum


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nrows", type=int, default=8)
    parser.add_argument("--ncols", type=int, default=8)
    parser.add_argument("--count", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    cases = make_workload(random.Random(args.seed), args.nrows, args.ncols, args.count)

    pure_time, pure_sum = run(_kernel_py, cases, args.ncols)
    print(f"pure-python: {pure_time:.4f}s over {args.count} reductions")
    if _kernel is None:
        print("compiled:    not built (pip install rebuilds it)")
        return 0
    fast_time, fast_sum = run(_kernel, cases, args.ncols)
    print(f"compiled:    {fast_time:.4f}s over {args.count} reductions")
    if fast_sum != pure_sum:
        print("MISMATCH: kernels disagree on pivot counts")
        return 1
    if fast_time > 0:
        print(f"speedup:     {pure_time / fast_time:.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
