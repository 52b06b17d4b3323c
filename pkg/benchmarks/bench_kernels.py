"""Benchmark the compiled kernel backend against the pure-Python twin.

Times the batch grid evaluator (the sweep hot loop) on a synthetic grid
and reports points/second for each available backend.

Usage: python benchmarks/bench_kernels.py [--points N] [--repeats K]
"""

import argparse
import time

import numpy as np

from horizonent._kernels import _pykernels

try:
    from horizonent._kernels import _ckernels
except ImportError:
    _ckernels = None


def make_grid(n_points):
    rng = np.random.default_rng(20240901)
    xi = rng.uniform(0.05, 3.0, n_points)
    mass = rng.uniform(0.01, 1.0, n_points)
    lam = rng.uniform(0.1, 3.0, n_points)
    nu = rng.uniform(0.1, 3.0, n_points)
    return tuple(np.ascontiguousarray(a) for a in (xi, mass, lam, nu))


def time_backend(module, grid, repeats):
    out = np.empty((len(grid[0]), 13))
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        module.evaluate_grid(*grid, out)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=200_000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    grid = make_grid(args.points)
    print(f"grid points: {args.points}")

    t_pure, out_pure = time_backend(_pykernels, grid, args.repeats)
    print(f"pure python : {t_pure:8.3f} s   {args.points / t_pure:12.0f} points/s")

    if _ckernels is None:
        print("compiled    : not available (build the extension to compare)")
        return

    t_c, out_c = time_backend(_ckernels, grid, args.repeats)
    print(f"compiled    : {t_c:8.3f} s   {args.points / t_c:12.0f} points/s")
    print(f"speedup     : {t_pure / t_c:8.1f}x")

    if np.array_equal(out_pure, out_c):
        print("outputs     : bit-identical")
    else:
        worst = np.max(np.abs(out_pure - out_c))
        print(f"outputs     : DIFFER, max abs deviation {worst:.3e}")


if __name__ == "__main__":
    main()
