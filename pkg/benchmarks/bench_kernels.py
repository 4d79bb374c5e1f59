#!/usr/bin/env python3
"""Time the numba kernels against their numpy twins; prints a CSV table.

Run: python3 benchmarks/bench_kernels.py --repeats 20
"""

import argparse
import csv
import sys
import time

import numpy as np

from ramanujan_r import _kernels


def cases(size):
    rng = np.random.default_rng(0)
    xs = rng.uniform(1e-3, 1.0, size)
    coeffs = rng.standard_normal(80)
    return {
        "power_sum": (2.5, 1.5, 1.0, size),
        "alt_pair_sum": (2.5, 1.0, size),
        "log_power_sum": (2.5, 1.5, 1.0, size),
        "alt_log_pair_sum": (2.5, 1.0, size),
        "horner": (coeffs, xs),
        "digamma": (xs,),
    }


def best_of(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=100_000, help="terms per sum / points per array")
    p.add_argument("--repeats", type=int, default=10)
    args = p.parse_args(argv)

    nb = _kernels.numba_kernels()
    ref = _kernels.NUMPY_KERNELS
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["kernel", "size", "numpy_ms", "numba_ms", "speedup", "max_rel_diff"])
    for name, a in cases(args.size).items():
        out_nb = nb[name](*a)  # compile outside the timed region
        out_np = ref[name](*a)
        diff = np.max(np.abs(np.asarray(out_nb) - np.asarray(out_np)) / np.maximum(np.abs(np.asarray(out_np)), 1e-300))
        t_np = best_of(ref[name], a, args.repeats)
        t_nb = best_of(nb[name], a, args.repeats)
        w.writerow([name, args.size, f"{t_np * 1e3:.4f}", f"{t_nb * 1e3:.4f}", f"{t_np / t_nb:.2f}", f"{diff:.3e}"])


if __name__ == "__main__":
    main()
