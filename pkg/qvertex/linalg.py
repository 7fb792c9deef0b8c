"""Small dense complex-matrix kernel: rank, Hermitian test, pivoted solve."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve

from .errors import DimensionError, NonFiniteError, SingularMatrixError

ComplexMatrix = npt.NDArray[np.complex128]

RANK_TOL = 1e-9
HERMITIAN_TOL = 1e-9
PIVOT_TOL = 1e-14
# A rank decision closer than this factor to the threshold is reported as ambiguous.
AMBIGUITY_FACTOR = 10.0


def as_matrix(data: Any, name: str = "matrix") -> ComplexMatrix:
    """Coerce data to a finite 2-D complex128 array (a fresh copy)."""
    matrix = np.array(data, dtype=np.complex128)
    if matrix.ndim == 1 and matrix.size == 0:
        matrix = matrix.reshape(0, 0)
    if matrix.ndim != 2:
        raise DimensionError(f"{name} must be two-dimensional, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteError(f"{name} contains non-finite entries")
    return matrix


def max_norm(matrix: npt.ArrayLike) -> float:
    """Largest entry magnitude; 0 for an empty matrix."""
    values = np.abs(np.asarray(matrix))
    return float(values.max()) if values.size else 0.0


def hermitian_part(matrix: ComplexMatrix) -> ComplexMatrix:
    return (matrix + matrix.conj().T) / 2


@dataclass(frozen=True)
class RankReport:
    """Rank decision together with the singular values it was taken from."""

    rank: int
    singular_values: tuple[float, ...]
    tol: float
    margin: float

    @property
    def ambiguous(self) -> bool:
        """True when a singular value sits within AMBIGUITY_FACTOR of the threshold."""
        return self.margin < AMBIGUITY_FACTOR


def rank_report(
    matrix: npt.ArrayLike, tol: float = RANK_TOL, scale: float = 0.0
) -> RankReport:
    """
    Tolerant rank of a matrix.

    A singular value counts when it exceeds tol times max(largest one, scale); a
    block of a larger matrix passes that matrix's norm as scale. The margin
    is the factor by which the kept and dropped singular values closest to the
    threshold clear it (infinite when nothing is near).
    """
    if not tol > 0:
        raise ValueError(f"rank tolerance must be positive, got {tol}")
    m = as_matrix(matrix)
    if m.size == 0:
        return RankReport(rank=0, singular_values=(), tol=tol, margin=math.inf)

    sigma = np.linalg.svd(m, compute_uv=False)
    sigma_max = max(float(sigma[0]), scale)
    if sigma_max == 0.0:
        return RankReport(
            rank=0, singular_values=tuple(float(x) for x in sigma), tol=tol, margin=math.inf
        )

    threshold = tol * sigma_max
    kept = sigma[sigma > threshold]
    dropped = sigma[sigma <= threshold]
    margin = math.inf
    if kept.size:
        margin = min(margin, float(kept[-1]) / threshold)
    if dropped.size and dropped[0] > 0:
        margin = min(margin, threshold / float(dropped[0]))

    return RankReport(
        rank=int(kept.size),
        singular_values=tuple(float(x) for x in sigma),
        tol=tol,
        margin=margin,
    )


def numerical_rank(matrix: npt.ArrayLike, tol: float = RANK_TOL) -> int:
    """Number of singular values above tol times the largest singular value."""
    return rank_report(matrix, tol).rank


def is_hermitian(matrix: npt.ArrayLike, tol: float = HERMITIAN_TOL) -> bool:
    """True iff max |M_ij - conj(M_ji)| <= tol."""
    m = as_matrix(matrix)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"Hermitian test needs a square matrix, got shape {m.shape}")
    return max_norm(m - m.conj().T) <= tol


def solve(
    matrix: npt.ArrayLike, rhs: npt.ArrayLike, pivot_tol: float = PIVOT_TOL
) -> ComplexMatrix:
    """
    Solve M X = RHS by LU factorisation with partial pivoting.

    Raises SingularMatrixError when the smallest pivot falls below pivot_tol
    relative to the largest entry of M.
    """
    m = as_matrix(matrix, "M")
    b = np.array(rhs, dtype=np.complex128)
    vector = b.ndim == 1
    if vector:
        b = b.reshape(-1, 1)
    b = as_matrix(b, "RHS")

    n = m.shape[0]
    if m.shape[1] != n:
        raise DimensionError(f"solve needs a square matrix, got shape {m.shape}")
    if b.shape[0] != n:
        raise DimensionError(f"RHS has {b.shape[0]} rows, expected {n}")
    if n == 0:
        return b.ravel() if vector else b

    scale = max_norm(m)
    if scale == 0.0:
        raise SingularMatrixError(0.0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(m, check_finite=False)
    pivot = float(np.min(np.abs(np.diag(lu))))
    if pivot <= pivot_tol * scale:
        raise SingularMatrixError(pivot)

    x = lu_solve((lu, piv), b, check_finite=False)
    return x.ravel() if vector else x


def adjugate(matrix: npt.ArrayLike) -> ComplexMatrix:
    """Classical adjoint: adj(M)_ij is the (j, i) cofactor of M."""
    m = as_matrix(matrix)
    n = m.shape[0]
    if m.shape[1] != n:
        raise DimensionError(f"adjugate needs a square matrix, got shape {m.shape}")
    if n == 1:
        return np.ones((1, 1), dtype=np.complex128)
    result = np.empty_like(m)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(m, j, axis=0), i, axis=1)
            result[i, j] = (-1) ** (i + j) * np.linalg.det(minor)
    return result


def permutation_matrix(order: tuple[int, ...]) -> ComplexMatrix:
    """P with P[order[i], i] = 1, so (P x)[order[i]] = x[i]."""
    n = len(order)
    p = np.zeros((n, n), dtype=np.complex128)
    for i, target in enumerate(order):
        p[target, i] = 1.0
    return p
