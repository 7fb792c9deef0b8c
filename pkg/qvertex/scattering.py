"""Scattering matrices S(k) = -(A + ikB)^-1 (A - ikB), amplitudes and limits."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .cases import CaseParameters, Pair
from .errors import NonFiniteError, ParameterError
from .linalg import ComplexMatrix, max_norm, solve
from .vertex import BoundaryPair, VertexClass, require_admissible

logger = logging.getLogger(__name__)

K_LO = 1e-6
K_HI = 1e6
LIMIT_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class ScatteringMatrix:
    """S(k) with 1-based accessors R(i) = S_ii and T(i, j) = S_ij."""

    k: float
    matrix: ComplexMatrix

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def _index(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"line {i} outside 1..{self.n}")
        return i - 1

    def R(self, i: int) -> complex:  # noqa: N802
        i = self._index(i)
        return complex(self.matrix[i, i])

    def T(self, i: int, j: int) -> complex:  # noqa: N802
        if i == j:
            raise IndexError("T(i, j) needs distinct lines; use R(i) for reflection")
        return complex(self.matrix[self._index(i), self._index(j)])

    def unitarity_residual(self) -> float:
        """max |S^dagger S - I|."""
        m = self.matrix
        return max_norm(m.conj().T @ m - np.eye(self.n))


@dataclass(frozen=True)
class ScatteringSolution:
    """The scattering state with a plane wave incoming on line j."""

    j: int
    k: float
    reflection: complex
    transmissions: dict[int, complex]
    residual: float

    @property
    def flux(self) -> float:
        return abs(self.reflection) ** 2 + sum(abs(t) ** 2 for t in self.transmissions.values())


def s_matrix_at(pair: BoundaryPair, k: float) -> ComplexMatrix:
    """
    The matrix formula at any non-zero real k, negative values included.

    Rows of A + ikB are equilibrated before the LU solve.
    """
    m = pair.a + 1j * k * pair.b
    rhs = pair.a - 1j * k * pair.b
    scale = np.abs(m).max(axis=1)
    scale[scale == 0] = 1.0
    return -solve(m / scale[:, None], rhs / scale[:, None])


def _check_k(k: float) -> float:
    k = float(k)
    if not math.isfinite(k):
        raise NonFiniteError(f"wave number must be finite, got {k}")
    if k <= 0:
        raise ParameterError(f"wave number must be positive, got {k}")
    return k


def s_matrix(pair: BoundaryPair, k: float, *, check: bool = True) -> ScatteringMatrix:
    """Unitary scattering matrix at wave number k > 0."""
    k = _check_k(k)
    if check:
        require_admissible(pair)
    return ScatteringMatrix(k, s_matrix_at(pair, k))


def scattering_solution(pair: BoundaryPair, j: int, k: float) -> ScatteringSolution:
    """
    Column j of S(k) as reflection and transmission amplitudes.

    The residual is max |A Psi + B Psi'| for Psi = (S + I) e_j and
    Psi' = ik (S - I) e_j, relative to max(1, |A|, k |B|).
    """
    n = pair.n
    if not 1 <= j <= n:
        raise IndexError(f"incoming line {j} outside 1..{n}")
    scattering = s_matrix(pair, k)
    column = scattering.matrix[:, j - 1]
    unit = np.zeros(n, dtype=np.complex128)
    unit[j - 1] = 1.0
    psi = column + unit
    dpsi = 1j * scattering.k * (column - unit)
    scale = max(1.0, max_norm(pair.a), scattering.k * max_norm(pair.b))
    residual = max_norm(pair.a @ psi + pair.b @ dpsi) / scale
    return ScatteringSolution(
        j=j,
        k=scattering.k,
        reflection=complex(column[j - 1]),
        transmissions={i + 1: complex(column[i]) for i in range(n) if i != j - 1},
        residual=residual,
    )


def dual_boundary(pair: BoundaryPair) -> BoundaryPair:
    """The high-low dual vertex (B, A)."""
    require_admissible(pair)
    dual = pair.swapped()
    require_admissible(dual)
    return dual


def duality_residual(pair: BoundaryPair, k: float) -> float:
    """max |S_d(k) + S(-1/k)|, zero up to rounding for any admissible pair."""
    k = _check_k(k)
    dual = dual_boundary(pair)
    return max_norm(s_matrix_at(dual, k) + s_matrix_at(pair, -1.0 / k))


@dataclass(frozen=True, eq=False)
class AsymptoticLimits:
    """S(0) and S(infinity) estimated by one Richardson step, with error bounds."""

    low: ComplexMatrix
    high: ComplexMatrix
    low_error: float
    high_error: float
    warnings: tuple[str, ...] = ()

    def t0(self, i: int, j: int) -> complex:
        return complex(self.low[i - 1, j - 1])

    def tinf(self, i: int, j: int) -> complex:
        return complex(self.high[i - 1, j - 1])


def _richardson(values: list[ComplexMatrix]) -> tuple[ComplexMatrix, float]:
    """values = f(h), f(2h), f(4h); returns 2f(h) - f(2h) and its error estimate."""
    fine = 2 * values[0] - values[1]
    coarse = 2 * values[1] - values[2]
    return fine, max_norm(fine - coarse)


def asymptotic_limits(
    pair: BoundaryPair,
    *,
    k_lo: float = K_LO,
    k_hi: float = K_HI,
    tol: float = LIMIT_TOL,
) -> AsymptoticLimits:
    """Limits of S(k) for k -> 0 (in h = k) and k -> infinity (in h = 1/k)."""
    if not 0 < k_lo < k_hi:
        raise ParameterError(f"need 0 < k_lo < k_hi, got {k_lo}, {k_hi}")
    require_admissible(pair)
    low, low_error = _richardson([s_matrix_at(pair, k_lo * m) for m in (1, 2, 4)])
    high, high_error = _richardson([s_matrix_at(pair, k_hi / m) for m in (1, 2, 4)])
    logger.debug("Richardson errors: low %.2e, high %.2e", low_error, high_error)

    warnings = []
    if low_error > tol:
        warnings.append(f"k -> 0 limit unstable (error estimate {low_error:.2e})")
    if high_error > tol:
        warnings.append(f"k -> infinity limit unstable (error estimate {high_error:.2e})")
    for message in warnings:
        logger.warning(message)
    return AsymptoticLimits(low, high, low_error, high_error, tuple(warnings))


@dataclass(frozen=True)
class AmplitudeSet:
    """Closed-form amplitudes for all ordered pairs, lines numbered from 1."""

    k: float
    transmissions: dict[Pair, complex]
    reflections: dict[int, complex] = field(default_factory=dict)

    def T(self, i: int, j: int) -> complex:  # noqa: N802
        return self.transmissions[(i, j)]

    def R(self, i: int) -> complex:  # noqa: N802
        return self.reflections[i]


def closed_form_amplitudes(
    case: CaseParameters, k: float, *, vertex_class: VertexClass | None = None
) -> AmplitudeSet:
    """
    Amplitudes of a vertex family from its printed formulas.

    The formulas give (1, 2), (2, 3), (3, 1); the opposite directions follow
    from T_ji(k) = conj(T_ij(-k)). Reflections come from the matrix formula,
    at k = 0 from the low-k limit.
    """
    k = float(k)
    if not math.isfinite(k) or k < 0:
        raise ParameterError(f"wave number must be finite and non-negative, got {k}")
    if vertex_class is not None and vertex_class.case_label != case.label:
        raise ParameterError(
            f"vertex class {vertex_class.case_label} does not match case {case.label}"
        )

    forward = case.transmissions(k)
    backward = case.transmissions(-k)
    transmissions: dict[Pair, complex] = {}
    for (i, j), value in forward.items():
        transmissions[(i, j)] = value
        transmissions[(j, i)] = backward[(i, j)].conjugate()

    pair = case.boundary()
    if k > 0:
        diagonal = np.diag(s_matrix(pair, k, check=False).matrix)
    else:
        diagonal = np.diag(asymptotic_limits(pair).low)
    reflections = {i + 1: complex(value) for i, value in enumerate(diagonal)}
    return AmplitudeSet(k, transmissions, reflections)
