#!/usr/bin/env python3
"""Benchmark the compiled Bareiss kernel against the pure-Python fallback.

The workload is the one the library actually runs: reduced Laplacians of
derived volcano graphs (sparse, small entries, spanning-tree counts as the
answer) plus dense random matrices.  Usage:

    python benchmarks/bench_determinant.py [--repeat N]
"""

import argparse
import random
import time

from voltage_tower import ConstantVoltage, CraterSpec, VolcanoSpec, derive, volcano
from voltage_tower import _kernel_py
from voltage_tower.linalg import _laplacian_rows

try:
    from voltage_tower import _kernel
except ImportError:
    _kernel = None


def reduced_laplacian(graph):
    lap = _laplacian_rows(graph)
    return [row[1:] for row in lap[1:]]


def dense_random(n, seed):
    rng = random.Random(seed)
    return [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]


def collect_cases():
    base = volcano(VolcanoSpec(2, 2, CraterSpec.cycle(4)))
    cases = []
    for n in (1, 2, 3):
        g = derive(base, ConstantVoltage(3), n).graph
        cases.append(
            (f"volcano tower Laplacian {g.vertex_count - 1}x{g.vertex_count - 1}",
             reduced_laplacian(g))
        )
    for n in (60, 120):
        cases.append((f"dense random {n}x{n}", dense_random(n, seed=n)))
    return cases


def time_kernel(fn, rows, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(rows)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernel is None:
        print("compiled kernel not built; showing pure Python only")
    header = f"{'case':45s} {'python':>10s} {'cython':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, rows in collect_cases():
        py_time, py_det = time_kernel(
            _kernel_py.bareiss_determinant, rows, args.repeat
        )
        if _kernel is not None:
            cy_time, cy_det = time_kernel(
                _kernel.bareiss_determinant, rows, args.repeat
            )
            assert cy_det == py_det, name
            print(
                f"{name:45s} {py_time:9.4f}s {cy_time:9.4f}s "
                f"{py_time / cy_time:7.1f}x"
            )
        else:
            print(f"{name:45s} {py_time:9.4f}s {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
