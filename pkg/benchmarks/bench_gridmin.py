#!/usr/bin/env python3
"""Compare the compiled grid-scan kernel against the numpy fallback.

Times `grid_min_2d` on seeded planar 1-median instances (full scan at the
oracle resolution) and reports per-backend wall time, agreement, and the
speedup.  Run after `pip install -e .`:

    python3 benchmarks/bench_gridmin.py [--k 8] [--step 1e-3] [--repeat 5]
"""

import argparse
import math
import time

import numpy as np

from viviani import _gridmin_py

try:
    from viviani import _gridmin
except ImportError:
    _gridmin = None


def instance(seed: int, k: int):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1.0, 1.0, size=(k, 2))
    return np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1])


def grid_for(px, py, step):
    x0, y0 = px.min(), py.min()
    nx = int(math.ceil((px.max() - x0) / step)) + 1
    ny = int(math.ceil((py.max() - y0) / step)) + 1
    return x0, y0, nx, ny


def best_time(fn, repeat):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=8, help="number of points")
    ap.add_argument("--step", type=float, default=1e-3, help="grid resolution")
    ap.add_argument("--repeat", type=int, default=5, help="timing repeats (best wins)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    px, py = instance(args.seed, args.k)
    x0, y0, nx, ny = grid_for(px, py, args.step)
    cells = nx * ny
    print(f"instance: k={args.k} seed={args.seed}  grid {nx} x {ny} "
          f"({cells:,} cells, {cells * args.k:,} distance evaluations)")

    t_py, r_py = best_time(
        lambda: _gridmin_py.grid_min_2d(px, py, x0, y0, nx, ny, args.step), args.repeat
    )
    rate = cells * args.k / t_py / 1e6
    print(f"python   : {t_py * 1e3:9.2f} ms   ({rate:8.1f} M evals/s)   min={r_py[0]:.12f}")

    if _gridmin is None:
        print("compiled : not built (install with a C compiler to compare)")
        return

    t_c, r_c = best_time(
        lambda: _gridmin.grid_min_2d(px, py, x0, y0, nx, ny, args.step), args.repeat
    )
    rate = cells * args.k / t_c / 1e6
    print(f"compiled : {t_c * 1e3:9.2f} ms   ({rate:8.1f} M evals/s)   min={r_c[0]:.12f}")
    print(f"speedup  : {t_py / t_c:.2f}x")
    dv = abs(r_py[0] - r_c[0])
    same_cell = r_py[1:] == r_c[1:]
    print(f"agreement: |min_py - min_c| = {dv:.3e}, same argmin cell: {same_cell}")


if __name__ == "__main__":
    main()
