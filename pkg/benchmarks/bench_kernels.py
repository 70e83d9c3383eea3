"""Timing comparison of the panel quadrature kernel backends.

Runs the compiled extension and the NumPy fallback on identical meshes for
two production-shaped workloads: a coefficient sweep (many singular meshes,
one per frequency) and a Gram-row batch (smooth exponent, frequencies up to
twice the basis size). Meshes come from the same grading rule the adaptive
driver uses, so panel counts match real calls. Agreement to roundoff is
asserted before any timing.

Usage: python3 benchmarks/bench_kernels.py [--n-sweep N] [--n-gram N]
"""
import argparse
import math
import time

import numpy as np

from weissbench._kernels import BACKEND, powcos_panels, powcos_panels_np
from weissbench.quadrature import DEFAULT_SPEC, _NODES, _WEIGHTS, \
    _halve, _powcos_mesh


def sweep_meshes(n_sweep, a):
    return [_halve(_powcos_mesh(a, 0.0, float(n), math.pi, DEFAULT_SPEC))
            for n in range(n_sweep)]


def run_workload(kernel, a, meshes):
    total = 0.0
    for freq, edges in enumerate(meshes):
        value, _ = kernel(a, 0.0, float(freq), edges, _NODES, _WEIGHTS)
        total += value
    return total


def time_workload(kernel, a, meshes, repeats):
    run_workload(kernel, a, meshes)  # warm-up
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        run_workload(kernel, a, meshes)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(
        description="compare compiled and NumPy quadrature kernels")
    parser.add_argument("--n-sweep", type=int, default=400,
                        help="frequencies in the coefficient sweep")
    parser.add_argument("--n-gram", type=int, default=800,
                        help="frequency differences in the Gram batch")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repetitions, best is reported")
    args = parser.parse_args()

    workloads = [
        ("coefficient sweep", -0.75, sweep_meshes(args.n_sweep, -0.75)),
        ("gram batch", 0.75, sweep_meshes(args.n_gram, 0.75)),
    ]
    if BACKEND != "compiled":
        print("compiled backend unavailable; timing the NumPy kernel only")
        for name, a, meshes in workloads:
            t = time_workload(powcos_panels_np, a, meshes, args.repeats)
            print(f"{name:18s}  python {t:8.3f} s")
        return

    print(f"{'workload':18s}  {'panels':>8s}  {'compiled':>10s}  "
          f"{'python':>10s}  {'speedup':>8s}")
    for name, a, meshes in workloads:
        v1 = run_workload(powcos_panels, a, meshes)
        v2 = run_workload(powcos_panels_np, a, meshes)
        if abs(v1 - v2) > 1e-13 * max(1.0, abs(v1)):
            raise SystemExit(f"{name}: backends disagree: {v1!r} vs {v2!r}")
        panels = sum(edges.size - 1 for edges in meshes)
        tc = time_workload(powcos_panels, a, meshes, args.repeats)
        tp = time_workload(powcos_panels_np, a, meshes, args.repeats)
        print(f"{name:18s}  {panels:8d}  {tc:8.3f} s  {tp:8.3f} s  "
              f"{tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
