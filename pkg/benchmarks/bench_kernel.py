#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Workloads mirror the hot loops of the Volkenborn/Carlitz Riemann sums:
power tables and weighted moment sums modulo p^W, once with a modulus
inside the 64-bit fast path and once beyond it.

Run:  python benchmarks/bench_kernel.py
"""

import random
import time

from rpqcalc._kernel import _fallback

try:
    from rpqcalc._kernel import _core
except ImportError:
    _core = None


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(backend, mod, count, exponent):
    rng = random.Random(42)
    base = rng.randrange(1, mod)
    weights_base = rng.randrange(1, mod)

    def run():
        ta = backend.power_table(base, count, mod)
        tw = backend.power_table(weights_base, count, mod)
        vals = backend.elementwise_mulmod(ta, tw, mod)
        backend.pow_weighted_sum(vals, exponent, tw, mod)
        backend.weighted_sum(tw, vals, mod)
        backend.alt_sum(vals, mod)

    return timeit(run)


def main():
    scenarios = [
        ("p=5, W=22 (64-bit fast path)", 5 ** 22, 5 ** 6, 3),
        ("p=7, W=28 (big-int path)", 7 ** 28, 7 ** 5, 3),
        ("p=3, W=60 (big-int path)", 3 ** 60, 3 ** 9, 2),
    ]
    print(f"{'scenario':38} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, mod, count, exponent in scenarios:
        t_py = bench(_fallback, mod, count, exponent)
        if _core is None:
            print(f"{label:38} {t_py * 1e3:9.2f}ms {'n/a':>10} {'':>8}")
            continue
        t_cy = bench(_core, mod, count, exponent)
        print(f"{label:38} {t_py * 1e3:9.2f}ms {t_cy * 1e3:9.2f}ms "
              f"{t_py / t_cy:7.1f}x")
    if _core is None:
        print("compiled kernel not available; install with the Cython "
              "extension to compare")


if __name__ == "__main__":
    main()
