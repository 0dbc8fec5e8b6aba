#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled ones.

Runs the oracle workloads that dominate the verification suites on both
backends and prints a timing table.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from ncfkit._kernels import pure

try:
    from ncfkit._kernels import fastcore
except ImportError:
    fastcore = None


def make_tables(seed, count, n):
    rng = random.Random(seed)
    return [bytes(rng.getrandbits(1) for _ in range(1 << n)) for _ in range(count)]


def bench_sensitivity_sweep(backend):
    tables = make_tables(1, 40, 12)
    for values in tables:
        backend.sensitivity_max(values, 12)


def bench_sensitivity_sum(backend):
    tables = make_tables(2, 40, 12)
    for values in tables:
        backend.sensitivity_sum(values, 12)


def bench_block_profile_n8(backend):
    tables = make_tables(3, 30, 8)
    for values in tables:
        backend.bs_profile(values, 8)


def bench_block_max_n10(backend):
    tables = make_tables(4, 2, 10)
    for values in tables:
        backend.block_max(values, 10, 10)


def bench_minimal_blocks_n10(backend):
    tables = make_tables(5, 4, 10)
    for values in tables:
        for word in range(0, 1 << 10, 8):
            backend.minimal_blocks(values, 10, word, 10)


WORKLOADS = [
    ("sensitivity sweep, 40 tables n=12", bench_sensitivity_sweep),
    ("sensitivity totals, 40 tables n=12", bench_sensitivity_sum),
    ("block profile (all caps), 30 tables n=8", bench_block_profile_n8),
    ("block sensitivity max, 2 tables n=10", bench_block_max_n10),
    ("minimal blocks, 512 words n=10", bench_minimal_blocks_n10),
]


def timed(fn, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of this many runs")
    args = parser.parse_args()

    if fastcore is None:
        print("compiled backend not built; timing the pure backend only\n")
    name_width = max(len(name) for name, _ in WORKLOADS)
    header = f"{'workload':<{name_width}}  {'pure':>9}"
    if fastcore is not None:
        header += f"  {'compiled':>9}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in WORKLOADS:
        t_pure = timed(fn, pure, args.repeat)
        row = f"{name:<{name_width}}  {t_pure * 1000:>7.1f}ms"
        if fastcore is not None:
            t_fast = timed(fn, fastcore, args.repeat)
            row += f"  {t_fast * 1000:>7.1f}ms  {t_pure / t_fast:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
