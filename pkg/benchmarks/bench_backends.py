"""Time the numba and numpy shortest-path backends on a Swiss-roll kNN graph.

Usage: python benchmarks/bench_backends.py [--n 800] [--k 10] [--repeats 3]

Reports best-of-N wall time per backend and the max absolute difference
between their outputs (expected: 0, the implementations share a recurrence).
"""

import argparse
import time

import numpy as np

from topostable import SelectorConfig, build_graph, gen_swiss_roll
from topostable.backends import (
    NUMBA_AVAILABLE,
    dijkstra_all_numba,
    dijkstra_all_numpy,
    floyd_warshall_numba,
    floyd_warshall_numpy,
)


def best_of(fn, repeats):
    times = []
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=800)
    ap.add_argument("--k", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    sample = gen_swiss_roll(args.n, args.seed)
    graph = build_graph(sample.data, SelectorConfig(k=args.k), "standard")
    dense = graph.to_dense_weights()
    indptr, indices, weights = graph.to_csr()
    print(f"swiss roll n={args.n} k={args.k}: {graph.n_edges} edges")

    rows = []
    t, out_np = best_of(lambda: floyd_warshall_numpy(dense.copy()), args.repeats)
    rows.append(("floyd", "numpy", t, out_np))
    t, out_np = best_of(lambda: dijkstra_all_numpy(indptr, indices, weights, graph.n), args.repeats)
    rows.append(("dijkstra", "numpy", t, out_np))

    if NUMBA_AVAILABLE:
        # compile outside the timed region
        floyd_warshall_numba(dense[:4, :4].copy())
        dijkstra_all_numba(np.zeros(2, dtype=np.int64), indices[:0], weights[:0], 1)
        t, out_nb = best_of(lambda: floyd_warshall_numba(dense.copy()), args.repeats)
        rows.append(("floyd", "numba", t, out_nb))
        t, out_nb = best_of(lambda: dijkstra_all_numba(indptr, indices, weights, graph.n), args.repeats)
        rows.append(("dijkstra", "numba", t, out_nb))
    else:
        print("numba not available: timing the numpy fallback only")

    print(f"{'kernel':<10}{'backend':<8}{'best s':>10}{'speedup':>9}")
    base = {}
    for kernel, backend, t, _ in rows:
        if backend == "numpy":
            base[kernel] = t
        speed = base[kernel] / t if t > 0 else float("inf")
        print(f"{kernel:<10}{backend:<8}{t:>10.3f}{speed:>8.1f}x")

    by = {(kernel, backend): out for kernel, backend, _, out in rows}
    for kernel in ("floyd", "dijkstra"):
        if (kernel, "numba") in by:
            a, b = by[(kernel, "numpy")], by[(kernel, "numba")]
            finite = np.isfinite(a)
            diff = float(np.max(np.abs(a[finite] - b[finite]))) if finite.any() else 0.0
            same_inf = np.array_equal(finite, np.isfinite(b))
            print(f"{kernel}: max |numpy - numba| = {diff:.1e}, inf pattern equal: {same_inf}")


if __name__ == "__main__":
    main()
