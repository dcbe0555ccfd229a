"""Compare the compiled kernels against the NumPy fallback.

Runs each hot kernel on a representative workload and reports per-call time
for both backends plus the speedup.  Skips the comparison (with a note) when
the compiled extension is not built.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from mvdrisk import _kernels_py

try:
    from mvdrisk import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeat: int) -> float:
    # one warmup call, then best-of-repeat wall time
    fn()
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _workloads():
    rng = np.random.default_rng(12345)

    lvr_grid = (np.arange(150) + 1) * 0.01
    quad_step = 1e-4

    def normal_curve(kernels):
        def run():
            for lvr in lvr_grid:
                kernels.normal_shortfall(lvr, 0.0, 0.20, -1.0, 1.0, quad_step)
        return run

    masses = np.abs(rng.standard_normal(180)) * 0.005
    inv_grid = (np.arange(180) + 1) * 0.01

    def tabulated_curve(kernels):
        def run():
            for lvr in inv_grid:
                kernels.tabulated_shortfall(lvr, -1.0, 0.01, masses)
        return run

    el = np.minimum(1.0, 0.015 * inv_grid ** 20 *
                    np.maximum(0.0, (inv_grid - 0.60) / inv_grid))
    el = np.maximum(el, 1e-12)

    def invert(kernels):
        def run():
            kernels.solve_el_masses(el, 0.10, 0.01)
        return run

    draws = rng.standard_normal(1_000_000) * 0.20

    def aggregate(kernels):
        def run():
            kernels.loss_aggregate(draws, 1.0)
        return run

    return [
        ("normal_shortfall, 150-point curve at step 1e-4", normal_curve),
        ("tabulated_shortfall, 180 strips x 180 grid points", tabulated_curve),
        ("solve_el_masses, 180 strips", invert),
        ("loss_aggregate, 1e6 draws", aggregate),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions per kernel (default 5)")
    args = parser.parse_args()

    if _kernels is None:
        print("compiled extension not built; benchmark needs both backends")
        print("python-backend timings only:")

    width = max(len(name) for name, _ in _workloads())
    header = f"{'kernel':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, make in _workloads():
        t_py = _time(make(_kernels_py), args.repeat)
        if _kernels is None:
            print(f"{name:<{width}}  {t_py * 1e3:>8.2f}ms  {'-':>10}  {'-':>8}")
            continue
        t_c = _time(make(_kernels), args.repeat)
        print(f"{name:<{width}}  {t_py * 1e3:>8.2f}ms  {t_c * 1e3:>8.2f}ms  "
              f"{t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
