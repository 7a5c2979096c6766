#!/usr/bin/env python3
"""Time the search kernels compiled with numba against their plain-Python bodies.

    python benchmarks/bench_kernels.py [--quick]

The Python path is the same source the package falls back to when
HONEYCOMB_DISABLE_NUMBA=1 is set.
"""

import argparse
import time

import numpy as np

from honeycomb._accel import NUMBA_ENABLED, python_impl
from honeycomb.kernels import max_brooks_search, perm_search


def hexperm(fn, d):
    out = np.empty((0, d), np.int64)
    return fn(d, np.empty(0, np.int64), -(d - 1) // 2, True, False, out, 0)[0]


def costas(fn, n):
    out = np.empty((0, n), np.int64)
    return fn(n, np.empty(0, np.int64), 0, False, True, out, 0)[0]


def honeycomb_direct(fn, d):
    out = np.empty((0, d), np.int64)
    return fn(d, np.empty(0, np.int64), -(d - 1) // 2, True, True, out, 0)[0]


def brooks(fn, w):
    return fn(w)[0]


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="smaller instances")
    args = parser.parse_args()

    cases = [
        ("hexperm count", hexperm, perm_search, 9 if args.quick else 11),
        ("Costas count", costas, perm_search, 8 if args.quick else 9),
        ("honeycomb direct", honeycomb_direct, perm_search, 11 if args.quick else 13),
        ("max brooks", brooks, max_brooks_search, 9 if args.quick else 10),
    ]
    if not NUMBA_ENABLED:
        print("numba disabled: both columns run the Python path")
    print(f"{'kernel':<18} {'size':>4} {'result':>8} {'numba s':>10} {'python s':>10} {'speedup':>8}")
    for name, driver, kernel, size in cases:
        driver(kernel, 1)  # compile outside the timing
        t_fast, r_fast = timed(driver, kernel, size)
        t_slow, r_slow = timed(driver, python_impl(kernel), size, repeat=1)
        assert r_fast == r_slow, (name, r_fast, r_slow)
        print(f"{name:<18} {size:>4} {r_fast:>8} {t_fast:>10.4f} {t_slow:>10.4f} {t_slow / t_fast:>7.0f}x")


if __name__ == "__main__":
    main()
