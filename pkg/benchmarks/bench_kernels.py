#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the four hot loops on realistic inputs: run-length coding, alternating
run expansion, fixed-point self-reading, and the Lyndon suffix scan.

    python benchmarks/bench_kernels.py [repeats]
"""

import sys
import time

from smoothwords.kernels import _ck, _py
from smoothwords import OrderedAlphabet, minimal_word


def bench(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    if _ck is None:
        print("compiled kernels are not available; nothing to compare")
        return 1

    n = 2_000_000
    smooth_word = bytes(minimal_word(OrderedAlphabet(2, 4))._materialize(n)[:n])
    counts = bytes(_py.run_lengths(smooth_word)[:-1] or b"\x01")
    lyndon_prefix = bytes(minimal_word(OrderedAlphabet(1, 3))._materialize(200_000)[:200_000])

    def kolakoski_compiled():
        _ck.kolakoski_extend(bytearray(), 0, n, 2, 1)

    def kolakoski_pure():
        _py.kolakoski_extend(bytearray(), 0, n, 2, 1)

    rows = [
        (
            f"run_lengths ({n/1e6:.0f}M letters)",
            bench(_ck.run_lengths, smooth_word, repeats=repeats),
            bench(_py.run_lengths, smooth_word, repeats=repeats),
        ),
        (
            f"expand_runs ({len(counts)/1e6:.1f}M counts)",
            bench(_ck.expand_runs, counts, 2, 4, repeats=repeats),
            bench(_py.expand_runs, counts, 2, 4, repeats=repeats),
        ),
        (
            f"kolakoski ({n/1e6:.0f}M letters)",
            bench(kolakoski_compiled, repeats=repeats),
            bench(kolakoski_pure, repeats=repeats),
        ),
        (
            "lyndon scan (200k letters)",
            bench(_ck.first_violation, lyndon_prefix, len(lyndon_prefix), repeats=repeats),
            bench(_py.first_violation, lyndon_prefix, len(lyndon_prefix), repeats=repeats),
        ),
    ]

    print(f"{'kernel':36s} {'compiled':>12s} {'pure':>12s} {'speedup':>9s}")
    for name, c, p in rows:
        print(f"{name:36s} {c * 1e3:>10.2f}ms {p * 1e3:>10.2f}ms {p / c:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
