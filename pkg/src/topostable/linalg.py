"""Deterministic linear-algebra primitives.

Gram-Schmidt orthogonalization, orthogonal-complement residuals, angles,
symmetric eigendecomposition, and Pearson correlation. Everything here is a
pure function of its inputs.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateBasisError,
    DegenerateComplementError,
    NotSymmetricError,
    ZeroVarianceError,
    ZeroVectorError,
)

# Relative tolerance for declaring a residual numerically zero (collinear
# neighbors, probe point inside the subspace). Comfortably above double
# precision noise, far below any meaningful geometric angle.
TOL_RANK = 1e-9


def _vec(x):
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1 or v.size < 1:
        raise ValueError("expected a 1-D vector of length >= 1")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    return v


def gram_schmidt_pair(x_p, x_n1, x_n2, tol_rank=TOL_RANK):
    """Orthogonal pair spanning the plane of two neighbor offsets.

    v1 is the offset to the first neighbor; v2 is the second offset with its
    v1 component projected out.

    Raises DegenerateBasisError when the offsets are collinear within
    ``tol_rank`` (relative), or when either neighbor coincides with x_p; the
    caller should substitute the next neighbor.
    """
    x_p, x_n1, x_n2 = _vec(x_p), _vec(x_n1), _vec(x_n2)
    v1 = x_n1 - x_p
    n1 = np.linalg.norm(v1)
    if n1 == 0.0:
        raise DegenerateBasisError("first neighbor coincides with base point")
    u = x_n2 - x_p
    nu = np.linalg.norm(u)
    if nu == 0.0:
        raise DegenerateBasisError("second neighbor coincides with base point")
    v2 = u - (np.dot(u, v1) / np.dot(v1, v1)) * v1
    if np.linalg.norm(v2) <= tol_rank * nu:
        raise DegenerateBasisError("neighbor offsets are collinear")
    return v1, v2


def residual_vector(x_q, x_p, basis, tol_rank=TOL_RANK):
    """Component of (x_q - x_p) orthogonal to every vector in ``basis``.

    ``basis`` must be pairwise orthogonal (e.g. from repeated
    gram_schmidt_pair steps). Raises DegenerateComplementError when the
    residual is numerically zero, i.e. x_q lies inside the spanned subspace.
    """
    x_q, x_p = _vec(x_q), _vec(x_p)
    d = x_q - x_p
    r = d.copy()
    for b in basis:
        b = _vec(b)
        r -= (np.dot(r, b) / np.dot(b, b)) * b
    if np.linalg.norm(r) <= tol_rank * np.linalg.norm(d):
        raise DegenerateComplementError("probe point lies in the spanned subspace")
    return r


def angle_deg(u, v):
    """Unsigned angle between two vectors, in degrees within [0, 180]."""
    u, v = _vec(u), _vec(v)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ZeroVectorError("angle undefined for a zero vector")
    c = np.clip(np.dot(u, v) / (nu * nv), -1.0, 1.0)
    return float(np.degrees(np.arccos(c)))


@dataclass(frozen=True)
class SubspaceFrame:
    """Local subspace at a base point: an orthogonal basis plus one vector
    of the orthogonal complement.

    Built per point by the stable neighbor selector (basis from
    gram_schmidt_pair steps, complement vector from residual_vector).
    """

    base_point: np.ndarray
    w_basis: tuple  # dim_w orthogonal vectors spanning the local subspace
    w_perp: np.ndarray
    dim_w: int

    def __post_init__(self):
        object.__setattr__(self, "base_point", _vec(self.base_point))
        basis = tuple(_vec(b) for b in self.w_basis)
        object.__setattr__(self, "w_basis", basis)
        object.__setattr__(self, "w_perp", _vec(self.w_perp))
        if self.dim_w != len(basis) or not 1 <= self.dim_w < self.base_point.size:
            raise ValueError("dim_w must equal len(w_basis) and satisfy 1 <= dim_w < D")
        norms = [np.linalg.norm(b) for b in basis]
        np_perp = np.linalg.norm(self.w_perp)
        if np_perp == 0.0 or any(n == 0.0 for n in norms):
            raise ValueError("frame vectors must have positive norm")
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                if abs(np.dot(basis[i], basis[j])) > 1e-10 * norms[i] * norms[j]:
                    raise ValueError("w_basis vectors must be pairwise orthogonal")
            if abs(np.dot(basis[i], self.w_perp)) > 1e-8 * norms[i] * np_perp:
                raise ValueError("w_perp must be orthogonal to every basis vector")


@dataclass(frozen=True)
class EigenPairs:
    """Top eigenvalues (descending) with orthonormal eigenvectors as columns."""

    values: np.ndarray   # (m,)
    vectors: np.ndarray  # (n, m), column j pairs with values[j]


def symmetric_eigen_top(a, m):
    """Algebraically largest m eigenpairs of a symmetric matrix.

    Deterministic for a fixed input: eigenvalue ties keep their original
    order (stable sort) and each eigenvector's largest-magnitude component
    is made positive so downstream outputs are reproducible.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    if not 1 <= m <= n:
        raise ValueError(f"m must be in [1, {n}], got {m}")
    scale = np.max(np.abs(a))
    asym = np.max(np.abs(a - a.T))
    if scale > 0.0 and asym > 1e-10 * scale:
        raise NotSymmetricError(f"relative asymmetry {asym / scale:.3e} exceeds 1e-10")
    values, vectors = np.linalg.eigh((a + a.T) / 2.0)
    order = np.argsort(-values, kind="stable")[:m]
    values = values[order]
    vectors = vectors[:, order]
    for j in range(m):
        col = vectors[:, j]
        if col[np.argmax(np.abs(col))] < 0.0:
            vectors[:, j] = -col
    return EigenPairs(values=values, vectors=vectors)


def pearson_r(a, b):
    """Sample Pearson correlation coefficient, clipped to [-1, 1]."""
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.size != b.size or a.size < 2:
        raise ValueError("inputs must have equal length >= 2")
    ac = a - a.mean()
    bc = b - b.mean()
    sa = np.dot(ac, ac)
    sb = np.dot(bc, bc)
    if sa == 0.0 or sb == 0.0:
        raise ZeroVarianceError("correlation undefined for a constant sequence")
    return float(np.clip(np.dot(ac, bc) / np.sqrt(sa * sb), -1.0, 1.0))
