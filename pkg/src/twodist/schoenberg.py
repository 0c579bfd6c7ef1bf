"""The Schoenberg functional of a squared-distance matrix.

For a symmetric zero-diagonal matrix M, the functional is the maximum of
sum_{i<j} m_ij x_i x_j over unit vectors x whose coordinates sum to zero.
By Schoenberg's criterion its sign decides whether M is realizable as the
squared distances of n points: nonpositive means realizable in R^(n-1),
strictly negative means the points span affine dimension exactly n-1, so a
zero value certifies an embedding that fits in R^(n-2).

The constrained maximum is computed spectrally: restricted to the sum-zero
hyperplane the quadratic form x'Mx has matrix B'MB for an orthonormal basis
B of the hyperplane, and sum_{i<j} m_ij x_i x_j = x'Mx / 2 for zero-diagonal
symmetric M, so the value is half the top eigenvalue of B'MB. The factor of
one half is easy to drop by accident; tests pin it against direct evaluation
of the double sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import as_symmetric, sum_zero_basis, symmetric_eigen

DEGENERACY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SchoenbergValue:
    """The functional's value together with a maximizing unit vector."""

    q: float
    maximizer: np.ndarray


class Embeddability(Enum):
    FULL_DIMENSION = "FullDimension"
    DEGENERATE = "Degenerate"
    NON_EMBEDDABLE = "NonEmbeddable"


@dataclass(frozen=True, eq=False)
class EmbeddabilityResult:
    kind: Embeddability
    value: SchoenbergValue


def q_value(m) -> SchoenbergValue:
    """Maximum of sum_{i<j} m_ij x_i x_j over the unit sphere of the sum-zero hyperplane.

    Requires a symmetric zero-diagonal matrix of size at least 2.
    """
    m = as_symmetric(m)
    n = m.shape[0]
    if n < 2:
        raise ValueError(f"need a matrix of size >= 2, got {n}")
    scale = float(np.abs(m).max())
    if float(np.abs(m.diagonal()).max()) > 1e-12 * (1.0 + scale):
        raise ValueError("matrix must have zero diagonal")
    b = sum_zero_basis(n)
    spectrum = symmetric_eigen(b.T @ (m @ b))
    x = b @ spectrum.eigenvectors[:, 0]
    x /= np.linalg.norm(x)
    x.setflags(write=False)
    return SchoenbergValue(q=0.5 * float(spectrum.eigenvalues[0]), maximizer=x)


def embeddability(m, tol: float = DEGENERACY_TOL) -> EmbeddabilityResult:
    """Classify m by the sign of the functional, at a scale-invariant tolerance.

    The value is compared against tol after scaling m so its largest entry
    is 1. Strictly negative means squared distances of a full-dimensional
    point set (affine dimension n-1); within tolerance of zero means
    realizable with affine dimension at most n-2; positive means not
    realizable at all.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    value = q_value(m)
    scale = float(np.abs(np.asarray(m, dtype=float)).max())
    normalized = value.q / scale if scale > 0 else 0.0
    if normalized > tol:
        kind = Embeddability.NON_EMBEDDABLE
    elif normalized < -tol:
        kind = Embeddability.FULL_DIMENSION
    else:
        kind = Embeddability.DEGENERATE
    return EmbeddabilityResult(kind=kind, value=value)
