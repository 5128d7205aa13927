#!/usr/bin/env python3
"""Benchmark the compiled coupling kernels against the NumPy fallback.

Run from the repo root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from gaindoublet import _kernels_py

try:
    from gaindoublet import _kernels_cy
except ImportError:
    _kernels_cy = None

SIZES = (1_024, 8_192, 65_536, 524_288)
N_LINES = 2
REPEATS = 7


def _best(fn, *args):
    best = float("inf")
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(7)
    centers = np.array([0.5, -0.5])
    strengths = np.full(N_LINES, 6.0)
    taus = np.full(N_LINES, 1.1)
    u = 2.0 * np.pi

    if _kernels_cy is None:
        print("compiled extension not built; showing NumPy timings only")

    header = f"{'n points':>10} {'kernel':>12} {'numpy':>12} {'cython':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in SIZES:
        deltas = rng.uniform(-10, 10, n)
        for name in ("coupling", "slope"):
            py_fn = getattr(_kernels_py,
                            "coupling_profile" if name == "coupling"
                            else "phase_slope_profile")
            t_py = _best(py_fn, deltas, centers, strengths, taus, u)
            if _kernels_cy is not None:
                cy_fn = getattr(_kernels_cy,
                                "coupling_profile" if name == "coupling"
                                else "phase_slope_profile")
                t_cy = _best(cy_fn, deltas, centers, strengths, taus, u)
                print(f"{n:>10} {name:>12} {t_py * 1e6:>10.1f}us "
                      f"{t_cy * 1e6:>10.1f}us {t_py / t_cy:>7.2f}x")
            else:
                print(f"{n:>10} {name:>12} {t_py * 1e6:>10.1f}us "
                      f"{'-':>12} {'-':>8}")

    if _kernels_cy is not None:
        deltas = rng.uniform(-10, 10, 4096)
        g1, p1 = _kernels_py.coupling_profile(deltas, centers, strengths, taus, u)
        g2, p2 = _kernels_cy.coupling_profile(deltas, centers, strengths, taus, u)
        s1 = _kernels_py.phase_slope_profile(deltas, centers, strengths, taus, u)
        s2 = _kernels_cy.phase_slope_profile(deltas, centers, strengths, taus, u)
        agree = max(np.max(np.abs(g1 - g2)), np.max(np.abs(p1 - p2)),
                    np.max(np.abs(s1 - s2)))
        print(f"\nbackend agreement: max |difference| = {agree:.3g}")


if __name__ == "__main__":
    main()
