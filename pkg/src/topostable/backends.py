"""Shortest-path kernels: numba-compiled hot loops with a numpy fallback.

All-pairs shortest paths dominate the pipeline's runtime, so both kernels
exist twice: an @njit version and a pure numpy/python version implementing
the identical recurrence (outputs are bitwise equal). The numba path is
used when available; set TOPOSTABLE_NO_NUMBA=1 in the environment before
import to force the fallback. See benchmarks/bench_backends.py for a
side-by-side timing.
"""

import os

import numpy as np


def _flag(name):
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:
    NUMBA_AVAILABLE = False

NUMBA_ENABLED = NUMBA_AVAILABLE and not _flag("TOPOSTABLE_NO_NUMBA")


def floyd_warshall_numpy(d):
    """In-place Floyd-Warshall on a dense (n, n) weight matrix."""
    n = d.shape[0]
    for k in range(n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    return d


def dijkstra_all_numpy(indptr, indices, weights, n):
    """Per-source Dijkstra (linear-scan selection) over CSR adjacency."""
    out = np.empty((n, n))
    for s in range(n):
        dist = np.full(n, np.inf)
        dist[s] = 0.0
        visited = np.zeros(n, dtype=bool)
        for _ in range(n):
            masked = np.where(visited, np.inf, dist)
            u = int(np.argmin(masked))
            if masked[u] == np.inf:
                break
            visited[u] = True
            lo, hi = indptr[u], indptr[u + 1]
            nbr = indices[lo:hi]
            cand = dist[u] + weights[lo:hi]
            better = cand < dist[nbr]
            dist[nbr[better]] = cand[better]
        out[s] = dist
    return out


if NUMBA_AVAILABLE:

    @njit(cache=True)
    def floyd_warshall_numba(d):
        n = d.shape[0]
        for k in range(n):
            for i in range(n):
                dik = d[i, k]
                if dik == np.inf:
                    continue
                for j in range(n):
                    alt = dik + d[k, j]
                    if alt < d[i, j]:
                        d[i, j] = alt
        return d

    @njit(cache=True)
    def dijkstra_all_numba(indptr, indices, weights, n):
        out = np.empty((n, n))
        dist = np.empty(n)
        visited = np.empty(n, dtype=np.bool_)
        for s in range(n):
            for i in range(n):
                dist[i] = np.inf
                visited[i] = False
            dist[s] = 0.0
            for _ in range(n):
                best = np.inf
                u = -1
                for i in range(n):
                    if not visited[i] and dist[i] < best:
                        best = dist[i]
                        u = i
                if u < 0:
                    break
                visited[u] = True
                for e in range(indptr[u], indptr[u + 1]):
                    v = indices[e]
                    alt = dist[u] + weights[e]
                    if alt < dist[v]:
                        dist[v] = alt
            out[s, :] = dist
        return out

else:
    floyd_warshall_numba = None
    dijkstra_all_numba = None


if NUMBA_ENABLED:
    floyd_kernel = floyd_warshall_numba
    dijkstra_kernel = dijkstra_all_numba
else:
    floyd_kernel = floyd_warshall_numpy
    dijkstra_kernel = dijkstra_all_numpy
