"""Weighted neighborhood graph construction.

Two selection rules are provided: plain k-nearest-neighbor selection, and a
topology-aware rule that keeps a far candidate only when its offset is close
to orthogonal (90 degrees within a window) to a vector from the orthogonal
complement of the local subspace spanned by the nearest neighbors. The
filter suppresses "bridge" edges between nearby manifold folds.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBasisError, DegenerateComplementError, KTooLargeError
from .linalg import TOL_RANK, SubspaceFrame, residual_vector

__all__ = [
    "DataSet",
    "SelectorConfig",
    "NeighborGraph",
    "knn_lists",
    "select_neighbors_stable",
    "build_graph",
]


@dataclass(frozen=True)
class DataSet:
    """N points in R^D, one sample per row, with optional integer labels."""

    points: np.ndarray
    labels: np.ndarray | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] < 2:
            raise ValueError("points must be an (n, d) matrix with d >= 2")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points must be finite")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            lab = np.asarray(self.labels, dtype=np.int64)
            if lab.shape != (pts.shape[0],):
                raise ValueError("labels must be one integer per point")
            object.__setattr__(self, "labels", lab)

    @property
    def n(self):
        return self.points.shape[0]

    @property
    def dim(self):
        return self.points.shape[1]

    def subset(self, idx):
        """New DataSet restricted to the given row indices (order preserved)."""
        lab = None if self.labels is None else self.labels[idx]
        return DataSet(self.points[idx], lab)


@dataclass(frozen=True)
class SelectorConfig:
    """Knobs for neighbor selection.

    k: candidate neighbor count. dim_w: dimension of the local subspace
    (number of nearest-neighbor offsets kept as its basis). delta_theta_deg:
    half-width of the acceptance window around 90 degrees.
    """

    k: int
    dim_w: int = 2
    delta_theta_deg: float = 5.0
    tol_rank: float = TOL_RANK

    def check(self, data, stable=True):
        """Validate against a dataset. Angle-filter fields are only
        constrained when the stable selector will actually run."""
        if self.k < 1:
            raise ValueError("k must be positive")
        if stable:
            if self.dim_w < 1:
                raise ValueError("dim_w must be positive")
            if self.k < self.dim_w + 1:
                raise ValueError("k must be at least dim_w + 1")
            if not 0.0 < self.delta_theta_deg < 90.0:
                raise ValueError("delta_theta_deg must lie strictly between 0 and 90")
            if self.dim_w >= data.dim:
                raise ValueError("dim_w must be smaller than the ambient dimension")
            if self.tol_rank <= 0.0:
                raise ValueError("tol_rank must be positive")


@dataclass(frozen=True)
class NeighborGraph:
    """Symmetric weighted graph over data points.

    Each undirected edge is stored once with i < j; weights are Euclidean
    distances. Logical symmetry (i, j, w) <-> (j, i, w) is implied.
    """

    n: int
    edges: np.ndarray    # (e, 2) int64, i < j, lexicographically sorted
    weights: np.ndarray  # (e,) float64

    def __post_init__(self):
        e = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        w = np.asarray(self.weights, dtype=np.float64).ravel()
        if e.shape[0] != w.shape[0]:
            raise ValueError("edges and weights must have equal length")
        if e.size and (np.any(e[:, 0] >= e[:, 1]) or np.any(e < 0) or np.any(e >= self.n)):
            raise ValueError("edges must satisfy 0 <= i < j < n")
        if np.any(w < 0.0):
            raise ValueError("weights must be non-negative")
        object.__setattr__(self, "edges", e)
        object.__setattr__(self, "weights", w)

    @property
    def n_edges(self):
        return self.edges.shape[0]

    def has_edge(self, i, j):
        a, b = (i, j) if i < j else (j, i)
        return bool(np.any((self.edges[:, 0] == a) & (self.edges[:, 1] == b)))

    def to_dense_weights(self):
        """Dense (n, n) weight matrix: 0 on the diagonal, inf off-edges."""
        d = np.full((self.n, self.n), np.inf)
        np.fill_diagonal(d, 0.0)
        i, j = self.edges[:, 0], self.edges[:, 1]
        d[i, j] = self.weights
        d[j, i] = self.weights
        return d

    def to_csr(self):
        """CSR arrays (indptr, indices, weights) with both edge directions."""
        rows = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        cols = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        wts = np.concatenate([self.weights, self.weights])
        order = np.lexsort((cols, rows))
        rows, cols, wts = rows[order], cols[order], wts[order]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=self.n), out=indptr[1:])
        return indptr, cols, wts


def _pairwise_sq(points):
    """Squared Euclidean distances via the Gram matrix (fast, used for
    ordering only; edge weights are recomputed exactly per pair)."""
    g = points @ points.T
    sq = np.diag(g).copy()
    d2 = sq[:, None] + sq[None, :] - 2.0 * g
    np.maximum(d2, 0.0, out=d2)
    np.fill_diagonal(d2, 0.0)
    return d2


def _knn_from_sq(d2, k):
    n = d2.shape[0]
    np.fill_diagonal(d2, -1.0)  # self sorts first, dropped below
    order = np.argsort(d2, axis=1, kind="stable")
    np.fill_diagonal(d2, 0.0)
    return order[:, 1 : k + 1]


def knn_lists(data, k):
    """Indices of the k nearest Euclidean neighbors of every point.

    Returns an (n, k) integer array, each row sorted by ascending distance
    (ties broken by index). The point itself is excluded.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k >= data.n:
        raise KTooLargeError(f"k={k} but only {data.n} points are available")
    return _knn_from_sq(_pairwise_sq(data.points), k)


def _stable_select(points, p, nbrs, d2_row, cfg):
    """Angle-filtered neighbor selection for one point.

    nbrs: ascending-distance candidate indices for p. d2_row: squared
    distances from p to all points (used to pick the far probe point).
    Returns the kept candidate indices, still in ascending-distance order.
    """
    x_p = points[p]
    diffs = points[nbrs] - x_p
    norms = np.linalg.norm(diffs, axis=1)
    coincident = norms == 0.0  # duplicates: connected unconditionally, unusable for the basis

    # Basis of the local subspace: walk candidates in distance order and
    # keep dim_w offsets that survive Gram-Schmidt against those already kept.
    basis = []
    for idx in range(len(nbrs)):
        if coincident[idx]:
            continue
        r = diffs[idx].copy()
        for b in basis:
            r -= (np.dot(r, b) / np.dot(b, b)) * b
        if np.linalg.norm(r) > cfg.tol_rank * norms[idx]:
            basis.append(r)
            if len(basis) == cfg.dim_w:
                break
    if len(basis) < cfg.dim_w:
        raise DegenerateBasisError(
            f"only {len(basis)} independent offsets among {len(nbrs)} candidates"
        )

    # Complement vector from a probe point outside the candidate set,
    # farthest first; walk inward past probes that lie in the subspace.
    in_hood = np.zeros(len(d2_row), dtype=bool)
    in_hood[p] = True
    in_hood[nbrs] = True
    v3 = None
    for q in np.argsort(-d2_row, kind="stable"):
        if in_hood[q]:
            continue
        try:
            v3 = residual_vector(points[q], x_p, basis, cfg.tol_rank)
            break
        except DegenerateComplementError:
            continue
    if v3 is None:
        raise DegenerateComplementError("no probe point outside the neighborhood spans the complement")
    frame = SubspaceFrame(base_point=x_p, w_basis=tuple(basis), w_perp=v3, dim_w=cfg.dim_w)

    # The dim_w nearest (and any duplicates) stay unconditionally; farther
    # candidates must fall inside the 90 +- delta_theta window against the
    # complement vector.
    keep = coincident.copy()
    keep[: cfg.dim_w] = True
    rest = np.flatnonzero(~keep)
    if rest.size:
        cosines = diffs[rest] @ frame.w_perp / (norms[rest] * np.linalg.norm(frame.w_perp))
        theta = np.degrees(np.arccos(np.clip(cosines, -1.0, 1.0)))
        keep[rest[np.abs(theta - 90.0) <= cfg.delta_theta_deg]] = True
    return [int(j) for j in nbrs[keep]]


def select_neighbors_stable(data, p, cfg):
    """Neighbor set for point p under the angle-filtered rule."""
    cfg.check(data, stable=True)
    d2 = _pairwise_sq(data.points)
    nbrs = _knn_from_sq(d2, cfg.k)[p]
    return _stable_select(data.points, p, nbrs, d2[p], cfg)


def build_graph(data, cfg, method="standard"):
    """Neighborhood graph under either selection rule, symmetrized by union.

    An edge (i, j) is present when either endpoint selected the other;
    weights are exact Euclidean distances. Selector failures are re-raised
    with the offending point index prepended.
    """
    if method not in ("standard", "stable"):
        raise ValueError(f"unknown method {method!r}")
    cfg.check(data, stable=method == "stable")
    if cfg.k >= data.n:
        raise KTooLargeError(f"k={cfg.k} but only {data.n} points are available")
    points = data.points
    d2 = _pairwise_sq(points)
    nn = _knn_from_sq(d2, cfg.k)

    pairs = set()
    if method == "standard":
        for p in range(data.n):
            for j in nn[p]:
                pairs.add((p, j) if p < j else (j, p))
    else:
        for p in range(data.n):
            try:
                selected = _stable_select(points, p, nn[p], d2[p], cfg)
            except (DegenerateBasisError, DegenerateComplementError) as exc:
                raise type(exc)(f"point {p}: {exc}") from exc
            for j in selected:
                pairs.add((p, j) if p < j else (j, p))

    if pairs:
        edges = np.array(sorted(pairs), dtype=np.int64)
        weights = np.linalg.norm(points[edges[:, 0]] - points[edges[:, 1]], axis=1)
    else:
        edges = np.zeros((0, 2), dtype=np.int64)
        weights = np.zeros(0)
    return NeighborGraph(n=data.n, edges=edges, weights=weights)
