#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends on the batch curvature scan.

Times `curv_all` over every edge of a seeded ER graph for each curvature
kind under both backends, then one short SDRF run per backend. The two
backends are exact drop-ins, so the output also asserts bit-identical
results before printing the speedups.

Usage:
    python benchmarks/backend_bench.py [--nodes 2000] [--p 0.01] [--seed 42]
                                       [--repeats 3] [--csv out.csv]
"""

import argparse
import csv
import sys
import time

import numpy as np

from curvflow import _backend
from curvflow import generators as gen
from curvflow.curvature import CurvatureKind, edge_curvature_values
from curvflow.sdrf import SdrfConfig, run_sdrf


def time_best(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=2000)
    parser.add_argument("--p", type=float, default=0.01)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--sdrf-iters", type=int, default=20)
    parser.add_argument("--csv", default=None, help="also write results as CSV")
    args = parser.parse_args(argv)

    graph = gen.erdos_renyi(args.nodes, args.p, args.seed)
    print(f"graph: ER(n={args.nodes}, p={args.p}, seed={args.seed}) "
          f"-> {graph.edge_count} edges")

    rows = []
    for kind in CurvatureKind:
        results = {}
        timings = {}
        for backend in ("numpy", "numba"):
            _backend.set_backend(backend)
            edge_curvature_values(graph, kind)  # warm the JIT / caches
            timings[backend] = time_best(lambda: edge_curvature_values(graph, kind),
                                         args.repeats)
            results[backend] = edge_curvature_values(graph, kind)
        assert np.array_equal(results["numpy"], results["numba"]), kind
        speedup = timings["numpy"] / timings["numba"]
        print(f"curv_all {kind.token:10s} numpy {timings['numpy']*1e3:9.2f} ms   "
              f"numba {timings['numba']*1e3:9.2f} ms   speedup {speedup:7.1f}x")
        rows.append(("curv_all", kind.token, timings["numpy"], timings["numba"], speedup))

    config = SdrfConfig(kind=CurvatureKind.HAANTJES, tau=163.0,
                        max_iterations=args.sdrf_iters, seed=1)
    sdrf_t = {}
    for backend in ("numpy", "numba"):
        _backend.set_backend(backend)
        run_sdrf(gen.barbell(4), SdrfConfig(kind=config.kind, tau=163.0,
                                            max_iterations=2, seed=0))
        sdrf_t[backend] = time_best(lambda: run_sdrf(graph, config), 1)
    speedup = sdrf_t["numpy"] / sdrf_t["numba"]
    print(f"sdrf ({args.sdrf_iters} iters, haantjes) "
          f"numpy {sdrf_t['numpy']:8.2f} s   numba {sdrf_t['numba']:8.2f} s   "
          f"speedup {speedup:7.1f}x")
    rows.append(("sdrf", config.kind.token, sdrf_t["numpy"], sdrf_t["numba"], speedup))

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["task", "kind", "numpy_seconds", "numba_seconds", "speedup"])
            writer.writerows(rows)
        print(f"wrote {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
