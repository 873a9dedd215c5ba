#!/usr/bin/env python
"""Time the numba kernels against their pure-numpy fallbacks.

Runs both builds of each hot kernel on identical inputs and prints a
best-of-N comparison table.  Inputs are Laplacians of seeded random
hypergraphs, i.e. the matrices the package actually decomposes.

    python benchmarks/bench_kernels.py [--repeats 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hyperlap import laplacian, random_hypergraph
from hyperlap import _kernels as K
from hyperlap.spectral import OFF_DIAGONAL_TOL


def _best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _edge_masks(h):
    masks = np.array(
        [sum(1 << v for v in e) for e in h.edges], dtype=np.int64
    )
    sizes = np.array([len(e) for e in h.edges], dtype=np.int64)
    return masks, sizes


def bench_jacobi(repeats):
    rows = []
    for n, m in ((16, 40), (32, 120), (48, 260), (64, 420)):
        h = random_hypergraph(n, m, 2, 4, seed=n)
        lap = laplacian(h)
        tol = OFF_DIAGONAL_TOL * np.linalg.norm(lap)

        def run(kernel, mat=lap, off=tol):
            a = mat.copy()
            v = np.eye(mat.shape[0])
            sweeps = kernel(a, v, 100, off)
            assert sweeps >= 0

        t_np = _best_of(lambda: run(K.jacobi_sweeps_numpy), repeats)
        t_nb = None
        if K.jacobi_sweeps_numba is not None:
            t_nb = _best_of(lambda: run(K.jacobi_sweeps_numba), repeats)
        rows.append((f"jacobi n={n}", t_nb, t_np))
    return rows


def bench_scan(repeats):
    rows = []
    for n, m in ((14, 24), (17, 40), (20, 64)):
        h = random_hypergraph(n, m, 2, 4, seed=100 + n)
        masks, sizes = _edge_masks(h)

        def run(kernel):
            kernel(masks, sizes, n)

        t_np = _best_of(lambda: run(K.subset_scan_numpy), repeats)
        t_nb = None
        if K.subset_scan_numba is not None:
            t_nb = _best_of(lambda: run(K.subset_scan_numba), repeats)
        rows.append((f"scan 2^{n} x {m} edges", t_nb, t_np))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repetitions per kernel (best is kept)")
    args = parser.parse_args()

    if K.jacobi_sweeps_numba is None:
        print("numba not importable: timing the numpy build only\n")
    else:
        K.warm_up()  # JIT-compile outside the timed region

    print(f"{'workload':<26} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for name, t_nb, t_np in bench_jacobi(args.repeats) + bench_scan(args.repeats):
        nb = f"{t_nb * 1e3:8.2f}ms" if t_nb is not None else "       --"
        ratio = f"{t_np / t_nb:8.1f}x" if t_nb else "       --"
        print(f"{name:<26} {nb:>10} {t_np * 1e3:8.2f}ms {ratio:>9}")


if __name__ == "__main__":
    main()
