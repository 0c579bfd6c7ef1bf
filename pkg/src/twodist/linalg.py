"""Dense symmetric linear algebra helpers.

Eigendecomposition, the orthonormal basis of the sum-zero hyperplane,
entrywise l1 distance, double centering of squared-distance matrices, and
a Cayley-Menger affine-dimension test that is independent of the spectral
route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError

RANK_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in descending order; eigenvector column k pairs with eigenvalue k."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_symmetric(a, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError(f"{name} has non-finite entries")
    scale = float(np.abs(a).max()) if a.size else 0.0
    if a.size and float(np.abs(a - a.T).max()) > 1e-12 * (1.0 + scale):
        raise ValueError(f"{name} is not symmetric")
    return a


def as_squared_distances(d2, name: str = "squared-distance matrix") -> np.ndarray:
    d2 = as_symmetric(d2, name)
    scale = float(np.abs(d2).max())
    if float(np.abs(d2.diagonal()).max()) > 1e-12 * (1.0 + scale):
        raise ValueError(f"{name} has a nonzero diagonal")
    if float(d2.min()) < 0.0:
        raise ValueError(f"{name} has negative entries")
    return d2


def symmetric_eigen(a) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix, eigenvalues descending."""
    a = as_symmetric(a)
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigendecomposition failed: {exc}") from exc
    return Spectrum(np.ascontiguousarray(w[::-1]), np.ascontiguousarray(v[:, ::-1]))


@lru_cache(maxsize=None)
def _sum_zero_basis(n: int) -> np.ndarray:
    # Householder reflector carrying e_1 to the normalized all-ones vector;
    # its remaining columns span {x : sum x_k = 0} orthonormally.
    u = np.full(n, 1.0 / np.sqrt(n))
    v = -u
    v[0] += 1.0
    w = v / np.linalg.norm(v)
    h = np.eye(n) - 2.0 * np.outer(w, w)
    b = np.ascontiguousarray(h[:, 1:])
    b.setflags(write=False)
    return b


def sum_zero_basis(n: int) -> np.ndarray:
    """Orthonormal n x (n-1) basis of the hyperplane of zero-sum vectors.

    Deterministic; the returned array is read-only and cached per n.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return _sum_zero_basis(int(n))


def l1_distance(a, b) -> float:
    """Entrywise l1 distance, counting both triangles of the matrices."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.abs(a - b).sum())


def double_center(d2) -> np.ndarray:
    """Gram matrix of centered coordinates from squared distances.

    Computes -1/2 P d2 P with P the projection that removes the all-ones
    direction; row sums of the result vanish. For Euclidean input the
    result is positive semidefinite and its rank is the affine dimension
    of the point set.
    """
    d2 = as_squared_distances(d2)
    row_mean = d2.mean(axis=1, keepdims=True)
    return -0.5 * (d2 - row_mean - row_mean.T + d2.mean())


def gram_rank(gram, tol: float = RANK_TOL) -> int:
    """Significant positive eigenvalues: those above tol * max(1, lambda_max)."""
    gram = as_symmetric(gram, "Gram matrix")
    w = np.linalg.eigvalsh(gram)
    threshold = tol * max(1.0, float(w[-1]))
    return int((w > threshold).sum())


def _cayley_menger_det(d2: np.ndarray, subset: tuple[int, ...]) -> float:
    m = len(subset)
    cm = np.ones((m + 1, m + 1))
    cm[0, 0] = 0.0
    cm[1:, 1:] = d2[np.ix_(subset, subset)]
    return float(np.linalg.det(cm))


def affine_dimension(d2, tol: float = RANK_TOL) -> int:
    """Affine dimension of a point set given by its squared distances.

    Returns the largest k for which some (k+1)-point subset has a
    Cayley-Menger determinant exceeding tol in magnitude; distances are
    scaled so the largest entry is 1 before testing, since raw determinant
    magnitudes vary wildly with scale. Non-Euclidean input is not detected
    here.
    """
    d2 = as_squared_distances(d2)
    n = d2.shape[0]
    scale = float(d2.max())
    if n == 1 or scale <= 0.0:
        return 0
    dn = d2 / scale
    for k in range(n - 1, 0, -1):
        for subset in itertools.combinations(range(n), k + 1):
            if abs(_cayley_menger_det(dn, subset)) > tol:
                return k
    return 0
