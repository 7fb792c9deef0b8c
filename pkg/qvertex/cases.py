"""
Named vertex families and their closed-form transmission amplitudes.

Every family is a frozen parameter record that knows its normal form and the
amplitudes T_ij(k) for the pairs (1, 2), (2, 3), (3, 1) (only (1, 2) for n = 2),
lines numbered from 1 in template order. The formulas are rational in k and are
valid for any real k, so k = 0 and negative k (reverse directions) are allowed.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any, ClassVar

import numpy as np
import numpy.typing as npt

from .errors import DimensionError, NonFiniteError, ParameterError, UnsupportedCaseError
from .linalg import (
    HERMITIAN_TOL,
    RANK_TOL,
    ComplexMatrix,
    adjugate,
    as_matrix,
    is_hermitian,
    max_norm,
    numerical_rank,
)
from .vertex import (
    BoundaryPair,
    CaseLabel,
    ReverseSTForm,
    STForm,
    assemble_boundary,
    case_label,
)

Pair = tuple[int, int]

# Relative size below which a scalar constraint counts as satisfied.
CONSTRAINT_TOL = 1e-9


def _real(value: Any, name: str) -> float:
    number = _complex(value, name)
    if abs(number.imag) > CONSTRAINT_TOL * max(1.0, abs(number.real)):
        raise ParameterError(f"{name} must be real, got {value!r}")
    return float(number.real)


def _complex(value: Any, name: str) -> complex:
    if isinstance(value, (list, tuple)) and len(value) == 2:
        value = complex(float(value[0]), float(value[1]))
    number = complex(value)
    if not (math.isfinite(number.real) and math.isfinite(number.imag)):
        raise NonFiniteError(f"{name} must be finite, got {value!r}")
    return number


def _couplings(values: Sequence[Any], name: str) -> tuple[complex, ...]:
    if isinstance(values, (int, float, complex)):
        values = (values,)
    return tuple(_complex(v, f"{name}[{i}]") for i, v in enumerate(values))


def template_pairs(n: int) -> tuple[Pair, ...]:
    """Pairs carried by the printed formulas: (1, 2) for n = 2, the cyclic triple for n = 3."""
    if n == 2:
        return ((1, 2),)
    if n == 3:
        return ((1, 2), (2, 3), (3, 1))
    raise UnsupportedCaseError(f"No closed-form amplitudes for n = {n}")


@dataclass(frozen=True)
class AmplitudeCoefficients:
    """Named scalars entering a family's amplitude formulas; unused ones stay None."""

    d0: float | None = None
    d1: float | None = None
    e0: float | None = None
    e1: float | None = None
    e2: float | None = None
    f0: float | None = None
    f1: float | None = None
    trace: float | None = None
    det: float | None = None
    minor_sum: float | None = None
    adjugate: ComplexMatrix | None = field(default=None, compare=False)
    length_scale: float | None = None


class CaseParameters(ABC):
    """Base class for vertex families."""

    name: ClassVar[str]

    @property
    @abstractmethod
    def n(self) -> int:
        """Number of lines."""

    @property
    @abstractmethod
    def label(self) -> CaseLabel | None:
        """Rank family of the constructed vertex."""

    @abstractmethod
    def form(self) -> STForm:
        """Normal form (ST or reverse ST) in template line order."""

    @abstractmethod
    def _amplitudes(self, k: float) -> dict[Pair, complex]:
        """Closed-form T_ij(k) on template_pairs(n)."""

    def coefficients(self) -> AmplitudeCoefficients:
        return AmplitudeCoefficients()

    def boundary(self) -> BoundaryPair:
        return assemble_boundary(self.form())

    def transmissions(self, k: float) -> dict[Pair, complex]:
        """T_ij(k) for the template pairs; k may be any finite real number."""
        pairs = template_pairs(self.n)
        k = float(k)
        if not math.isfinite(k):
            raise NonFiniteError(f"wave number must be finite, got {k}")
        values = self._amplitudes(k)
        return {pair: complex(values[pair]) for pair in pairs}

    def parameters(self) -> dict[str, Any]:
        """Scalar parameters by name, for JSON output."""
        raise NotImplementedError


def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


@dataclass(frozen=True)
class DisjointCase(CaseParameters):
    """Decoupled lines: Dirichlet (A = I, B = 0) or Neumann (A = 0, B = I)."""

    name: ClassVar[str] = "disjoint"

    lines: int
    neumann: bool = False

    def __post_init__(self) -> None:
        if self.lines < 1:
            raise DimensionError("A vertex needs at least one line")

    @property
    def n(self) -> int:
        return self.lines

    @property
    def label(self) -> CaseLabel:
        return CaseLabel.NEUMANN_DISJOINT if self.neumann else CaseLabel.DIRICHLET_DISJOINT

    def form(self) -> STForm:
        if self.neumann:
            return STForm(np.zeros((self.n, self.n)), np.zeros((self.n, 0)), _identity(self.n))
        return STForm(np.zeros((0, 0)), np.zeros((0, self.n)), _identity(self.n))

    def _amplitudes(self, k: float) -> dict[Pair, complex]:
        return {pair: 0j for pair in template_pairs(self.n)}

    def parameters(self) -> dict[str, Any]:
        return {"lines": self.n, "neumann": self.neumann}


@dataclass(frozen=True)
class DeltaCase(CaseParameters):
    """
    ST form with r_B = 1: S = [s], T = t.

    s = 0 gives the scale-invariant coupling with k-independent scattering.
    """

    name: ClassVar[str] = "delta"

    s: float
    t: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", _real(self.s, "s"))
        object.__setattr__(self, "t", _couplings(self.t, "t"))
        if not self.t:
            raise DimensionError("t needs at least one entry")

    @property
    def n(self) -> int:
        return 1 + len(self.t)

    @property
    def label(self) -> CaseLabel:
        return CaseLabel.FT_SCALE_INVARIANT if self.s == 0 else CaseLabel.DELTA_FAMILY

    def _u(self) -> npt.NDArray[np.complex128]:
        return np.array((1.0, *self.t), dtype=np.complex128)

    def form(self) -> STForm:
        return STForm([[self.s]], [list(self.t)], _identity(self.n))

    def coefficients(self) -> AmplitudeCoefficients:
        norm = float(np.sum(np.abs(self._u()) ** 2))
        return AmplitudeCoefficients(length_scale=norm / abs(self.s) if self.s else math.inf)

    def _amplitudes(self, k: float) -> dict[Pair, complex]:
        u = self._u()
        norm = float(np.sum(np.abs(u) ** 2))
        result = {}
        for i, j in template_pairs(self.n):
            dyad = u[i - 1].conjugate() * u[j - 1]
            if self.s == 0:
                result[(i, j)] = 2 * dyad / norm
            else:
                result[(i, j)] = 2 * k * dyad / (k * norm + 1j * self.s)
        return result

    def parameters(self) -> dict[str, Any]:
        return {"s": self.s, "t": list(self.t)}


@dataclass(frozen=True)
class DeltaPrimeCase(CaseParameters):
    """Reverse ST form with rank(A) = 1: S-bar = [s_bar], T-bar = c."""

    name: ClassVar[str] = "delta_prime"

    s_bar: float
    c: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s_bar", _real(self.s_bar, "s_bar"))
        object.__setattr__(self, "c", _couplings(self.c, "c"))
        if not self.c:
            raise DimensionError("c needs at least one entry")
        if self.s_bar == 0:
            raise ParameterError("s_bar must be non-zero; s_bar = 0 is a scale-invariant coupling")

    @property
    def n(self) -> int:
        return 1 + len(self.c)

    @property
    def label(self) -> CaseLabel:
        return CaseLabel.DELTA_PRIME_FAMILY

    def _u(self) -> npt.NDArray[np.complex128]:
        return np.array((1.0, *self.c), dtype=np.complex128)

    def form(self) -> ReverseSTForm:
        return ReverseSTForm([[self.s_bar]], [list(self.c)], _identity(self.n))

    def coefficients(self) -> AmplitudeCoefficients:
        norm = float(np.sum(np.abs(self._u()) ** 2))
        return AmplitudeCoefficients(length_scale=abs(self.s_bar) / norm)

    def _amplitudes(self, k: float) -> dict[Pair, complex]:
        u = self._u()
        norm = float(np.sum(np.abs(u) ** 2))
        den = norm - 1j * k * self.s_bar
        return {
            (i, j): -2 * u[i - 1].conjugate() * u[j - 1] / den for i, j in template_pairs(self.n)
        }

    def parameters(self) -> dict[str, Any]:
        return {"s_bar": self.s_bar, "c": list(self.c)}


@dataclass(frozen=True)
class MixedRankCase(CaseParameters):
    """
    n = 3, rank(B) = 2 with rank-one S = s [[1, c], [c*, |c|^2]] and T = (t1, t2)^T.

    The reverse form has S-bar = 1/s and T-bar = (c, c t1* - t2*).
    """

    name: ClassVar[str] = "mixed"

    s: float
    c: complex
    t1: complex
    t2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", _real(self.s, "s"))
        object.__setattr__(self, "c", _complex(self.c, "c"))
        object.__setattr__(self, "t1", _complex(self.t1, "t1"))
        object.__setattr__(self, "t2", _complex(self.t2, "t2"))
        if self.s == 0:
            raise ParameterError("s must be non-zero for a rank-one S block")

    @classmethod
    def from_entries(
        cls, s11: float, s12: complex, s22: float, t1: complex, t2: complex
    ) -> "MixedRankCase":
        """Read (s, c) off the entries of a 2x2 Hermitian block that must have rank one."""
        s11 = _real(s11, "s11")
        s22 = _real(s22, "s22")
        s12 = _complex(s12, "s12")
        if s11 == 0:
            raise ParameterError("s11 must be non-zero for the rank-one template")
        gap = abs(s11 * s22 - abs(s12) ** 2)
        if gap > CONSTRAINT_TOL * max(1.0, abs(s11 * s22), abs(s12) ** 2):
            raise ParameterError(
                f"rank-one S requires s11 s22 = |s12|^2 (off by {gap:.3e})"
            )
        return cls(s=s11, c=s12 / s11, t1=t1, t2=t2)

    @property
    def n(self) -> int:
        return 3

    @property
    def label(self) -> CaseLabel:
        return CaseLabel.MIXED_RANK22

    @property
    def t3_bar(self) -> complex:
        return self.c * self.t1.conjugate() - self.t2.conjugate()

    def s_block(self) -> ComplexMatrix:
        c = self.c
        return self.s * np.array([[1.0, c], [c.conjugate(), abs(c) ** 2]], dtype=np.complex128)

    def form(self) -> STForm:
        return STForm(self.s_block(), [[self.t1], [self.t2]], _identity(3))

    def coefficients(self) -> AmplitudeCoefficients:
        d0 = 1 + abs(self.c) ** 2 + abs(self.t3_bar) ** 2
        d1 = 1 + abs(self.t1) ** 2 + abs(self.t2) ** 2
        return AmplitudeCoefficients(d0=d0, d1=d1)

    def _amplitudes(self, k: float) -> dict[Pair, complex]:
        co = self.coefficients()
        s, c, t1, t2 = self.s, self.c, self.t1, self.t2
        den = co.d1 * k + 1j * s * co.d0
        return {
            (3, 1): (2 * t1.conjugate() * k + 2j * c.conjugate() * s * self.t3_bar) / den,
            (1, 2): (-2 * t2.conjugate() * t1 * k - 2j * c * s) / den,
            (2, 3): (2 * t2 * k - 2j * s * (c.conjugate() * t1 - t2)) / den,
        }

    def parameters(self) -> dict[str, Any]:
        return {"s": self.s, "c": self.c, "t1": self.t1, "t2": self.t2}


@dataclass(frozen=True)
class RankTwoBCase(CaseParameters):
    """n = 3, rank(B) = 2: S = [[s11, s12], [s12*, s22]], T = (t1, t2)^T."""

    name: ClassVar[str] = "rank2b"

    s11: float
    s12: complex
    s22: float
    t1: complex
    t2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "s11", _real(self.s11, "s11"))
        object.__setattr__(self, "s12", _complex(self.s12, "s12"))
        object.__setattr__(self, "s22", _real(self.s22, "s22"))
        object.__setattr__(self, "t1", _complex(self.t1, "t1"))
        object.__setattr__(self, "t2", _complex(self.t2, "t2"))

    @property
    def n(self) -> int:
        return 3

    def s_block(self) -> ComplexMatrix:
        return np.array(
            [[self.s11, self.s12], [self.s12.conjugate(), self.s22]], dtype=np.complex128
        )

    @property
    def rank_s(self) -> int:
        return numerical_rank(self.s_block(), RANK_TOL)

    @property
    def label(self) -> CaseLabel:
        return case_label(3, 2, 1 + self.rank_s)

    def form(self) -> STForm:
        return STForm(self.s_block(), [[self.t1], [self.t2]], _identity(3))

    def coefficients(self) -> AmplitudeCoefficients:
        s11, s12, s22, t1, t2 = self.s11, self.s12, self.s22, self.t1, self.t2
        e1 = (
            s11
            + s22
            + s22 * abs(t1) ** 2
            - 2 * (s12 * t1.conjugate() * t2).real
            + s11 * abs(t2) ** 2
        )
        return AmplitudeCoefficients(
            e0=-(s11 * s22 - abs(s12) ** 2),
            e1=e1,
            e2=1 + abs(t1) ** 2 + abs(t2) ** 2,
        )

    def _amplitudes(self, k: float) -> dict[Pair, complex]:
        co = self.coefficients()
        s11, s12, s22, t1, t2 = self.s11, self.s12, self.s22, self.t1, self.t2
        # Numerators and denominator share powers of k that vanish with det S and S.
        rank = self.rank_s
        if rank == 0:
            return {
                (3, 1): 2 * t1.conjugate() / co.e2,
                (1, 2): -2 * t2.conjugate() * t1 / co.e2,
                (2, 3): 2 * t2 / co.e2,
            }
        if rank == 1:
            den = k * co.e2 + 1j * co.e1
            lead, lin = k, 1.0
        else:
            den = k * k * co.e2 + 1j * k * co.e1 + co.e0
            lead, lin = k * k, k
        return {
            (3, 1): (
                2 * t1.conjugate() * lead
                + 2j * (s22 * t1.conjugate() - s12.conjugate() * t2.conjugate()) * lin
            )
            / den,
            (1, 2): (-2 * t2.conjugate() * t1 * lead - 2j * s12 * lin) / den,
            (2, 3): (2 * t2 * lead - 2j * (s12.conjugate() * t1 - s11 * t2) * lin) / den,
        }

    def parameters(self) -> dict[str, Any]:
        return {
            "s11": self.s11,
            "s12": self.s12,
            "s22": self.s22,
            "t1": self.t1,
            "t2": self.t2,
        }


@dataclass(frozen=True)
class RankTwoACase(CaseParameters):
    """
    n = 3, rank(B) = 3, rank(A) = 2.

    S = [I; u^dagger] G [I, u] with G = [[s, q], [q*, r]] invertible and
    u = (c, d)^T; the corner entry is f = u^dagger G u. The reverse form has
    S-bar = G^-1 and T-bar = u.
    """

    name: ClassVar[str] = "rank2a"

    s: float
    q: complex
    r: float
    c: complex
    d: complex
    f: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", _real(self.s, "s"))
        object.__setattr__(self, "q", _complex(self.q, "q"))
        object.__setattr__(self, "r", _real(self.r, "r"))
        object.__setattr__(self, "c", _complex(self.c, "c"))
        object.__setattr__(self, "d", _complex(self.d, "d"))
        scale = max(1.0, abs(self.s * self.r), abs(self.q) ** 2)
        if abs(self.delta) <= CONSTRAINT_TOL * scale:
            raise ParameterError("s r - |q|^2 must be non-zero; use the full-S template instead")
        corner = self._corner()
        if self.f is None:
            object.__setattr__(self, "f", corner)
        else:
            f = _real(self.f, "f")
            if abs(f - corner) > CONSTRAINT_TOL * max(1.0, abs(corner)):
                raise ParameterError(f"f must equal u^dagger G u = {corner:.12g}, got {f:.12g}")
            object.__setattr__(self, "f", f)

    @property
    def delta(self) -> float:
        return self.s * self.r - abs(self.q) ** 2

    def _corner(self) -> float:
        s, q, r, c, d = self.s, self.q, self.r, self.c, self.d
        return (
            abs(c) ** 2 * s + 2 * (c.conjugate() * d * q).real + abs(d) ** 2 * r
        )

    @property
    def n(self) -> int:
        return 3

    @property
    def label(self) -> CaseLabel:
        return CaseLabel.GENERIC_RANK32

    def g_block(self) -> ComplexMatrix:
        return np.array([[self.s, self.q], [self.q.conjugate(), self.r]], dtype=np.complex128)

    def s_block(self) -> ComplexMatrix:
        g = self.g_block()
        lift = np.array([[1.0, 0.0, self.c], [0.0, 1.0, self.d]], dtype=np.complex128)
        return lift.conj().T @ g @ lift

    def form(self) -> STForm:
        return STForm(self.s_block(), np.zeros((3, 0)), _identity(3))

    def reverse_form(self) -> ReverseSTForm:
        return ReverseSTForm(np.linalg.inv(self.g_block()), [[self.c], [self.d]], _identity(3))

    def coefficients(self) -> AmplitudeCoefficients:
        return AmplitudeCoefficients(
            f0=-self.delta * (1 + abs(self.c) ** 2 + abs(self.d) ** 2),
            f1=self.s + self.r + self.f,
        )

    def _amplitudes(self, k: float) -> dict[Pair, complex]:
        co = self.coefficients()
        s, q, r, c, d, delta = self.s, self.q, self.r, self.c, self.d, self.delta
        den = k * k + 1j * k * co.f1 + co.f0
        return {
            (3, 1): (
                2 * c.conjugate() * delta
                - 2j * k * (c.conjugate() * s + d.conjugate() * q.conjugate())
            )
            / den,
            (1, 2): -2 * (1j * k * q + c * d.conjugate() * delta) / den,
            (2, 3): (2 * d * delta - 2j * k * (c * q.conjugate() + d * r)) / den,
        }

    def parameters(self) -> dict[str, Any]:
        return {"s": self.s, "q": self.q, "r": self.r, "c": self.c, "d": self.d, "f": self.f}


@dataclass(frozen=True, eq=False)
class HermitianCase(CaseParameters):
    """Full-rank B: B = I, A = -S with S an arbitrary Hermitian n x n block."""

    name: ClassVar[str] = "hermitian"

    s: ComplexMatrix

    def __post_init__(self) -> None:
        s = as_matrix(self.s, "S")
        if s.shape[0] != s.shape[1] or s.shape[0] < 1:
            raise DimensionError(f"S must be square and non-empty, got shape {s.shape}")
        if not is_hermitian(s, HERMITIAN_TOL * max(1.0, max_norm(s))):
            raise ParameterError("S must be Hermitian")
        s = (s + s.conj().T) / 2
        s.setflags(write=False)
        object.__setattr__(self, "s", s)

    @classmethod
    def from_upper(cls, entries: dict[str, Any], n: int = 3) -> "HermitianCase":
        """Build S from entries named s11, s12, ... on and above the diagonal."""
        s = np.zeros((n, n), dtype=np.complex128)
        for i in range(n):
            for j in range(i, n):
                key = f"s{i + 1}{j + 1}"
                if key not in entries:
                    raise ParameterError(f"missing entry {key}")
                value = _real(entries[key], key) if i == j else _complex(entries[key], key)
                s[i, j] = value
                s[j, i] = complex(value).conjugate()
        return cls(s)

    @property
    def n(self) -> int:
        return self.s.shape[0]

    @property
    def rank_s(self) -> int:
        return numerical_rank(self.s, RANK_TOL)

    @property
    def label(self) -> CaseLabel | None:
        return case_label(self.n, self.n, self.rank_s)

    def form(self) -> STForm:
        return STForm(self.s, np.zeros((self.n, 0)), _identity(self.n))

    def coefficients(self) -> AmplitudeCoefficients:
        s = self.s
        n = self.n
        minors = sum(
            (s[i, i] * s[j, j] - s[i, j] * s[j, i]).real for i in range(n) for j in range(i + 1, n)
        )
        return AmplitudeCoefficients(
            trace=float(np.trace(s).real),
            det=float(np.linalg.det(s).real),
            minor_sum=float(minors),
            adjugate=adjugate(s),
        )

    def _amplitudes(self, k: float) -> dict[Pair, complex]:
        s = self.s
        rank = self.rank_s
        pairs = template_pairs(self.n)
        if rank == 0:
            return {pair: 0j for pair in pairs}
        co = self.coefficients()
        if self.n == 2:
            # T12 = 2k s12 / (i k^2 - k tr S - i det S), with a factor k cancelled when det S = 0
            if rank == 2:
                den = 1j * k * k - k * co.trace - 1j * co.det
                return {(1, 2): 2 * k * s[0, 1] / den}
            return {(1, 2): 2 * s[0, 1] / (1j * k - co.trace)}

        adj = co.adjugate
        result = {}
        for i, j in pairs:
            sij, mij = s[i - 1, j - 1], adj[i - 1, j - 1]
            if rank == 3:
                num = -2j * k * k * sij - 2 * k * mij
                den = k**3 + 1j * k * k * co.trace - k * co.minor_sum - 1j * co.det
            elif rank == 2:
                num = -2j * k * sij - 2 * mij
                den = k * k + 1j * k * co.trace - co.minor_sum
            else:
                num = -2j * sij
                den = k + 1j * co.trace
            result[(i, j)] = num / den
        return result

    def parameters(self) -> dict[str, Any]:
        n = self.n
        return {
            f"s{i + 1}{j + 1}": complex(self.s[i, j]) for i in range(n) for j in range(i, n)
        }


class CaseRegistry:
    """Registry of case families by name."""

    def __init__(self) -> None:
        self._cases: dict[str, type[CaseParameters]] = {}

    def register(self, case: type[CaseParameters]) -> None:
        self._cases[case.name] = case

    def get(self, name: str) -> type[CaseParameters] | None:
        return self._cases.get(name)

    def names(self) -> list[str]:
        return list(self._cases)

    def build(self, name: str, params: dict[str, Any]) -> CaseParameters:
        """Instantiate a family from a name and a parameter map."""
        case = self.get(name)
        if case is None:
            raise ParameterError(f"Unknown case {name!r}; known: {', '.join(self.names())}")
        try:
            if case is HermitianCase and "S" not in params:
                entries = {key: value for key, value in params.items() if key != "n"}
                return HermitianCase.from_upper(entries, int(params.get("n", 3)))
            if case is HermitianCase:
                return HermitianCase(params["S"])
            if case is MixedRankCase and "s11" in params:
                return MixedRankCase.from_entries(**params)
            return case(**params)
        except TypeError as e:
            raise ParameterError(f"Bad parameters for case {name!r}: {e}") from None


def default_registry() -> CaseRegistry:
    registry = CaseRegistry()
    for case in (
        DisjointCase,
        DeltaCase,
        DeltaPrimeCase,
        MixedRankCase,
        RankTwoBCase,
        RankTwoACase,
        HermitianCase,
    ):
        registry.register(case)
    return registry


def _check_lines(n: int, values: Sequence[Any], name: str) -> None:
    if n < 2:
        raise DimensionError(f"n must be at least 2, got {n}")
    if len(values) != n - 1:
        raise DimensionError(f"{name} must have n - 1 = {n - 1} entries, got {len(values)}")


def make_delta(n: int, s: float, t: Sequence[complex]) -> BoundaryPair:
    """
    delta coupling of strength s with line weights t.

    With all t_i = 1 the vertex reads phi'_1 + ... + phi'_n = s phi_1 = ... = s phi_n.
    """
    t = _couplings(t, "t")
    _check_lines(n, t, "t")
    return DeltaCase(s, t).boundary()


def make_delta_prime(n: int, s_bar: float, coeffs: Sequence[complex]) -> BoundaryPair:
    """delta-prime coupling: phi_1 + c phi_2 + d phi_3 = s_bar phi'_1 for n = 3."""
    coeffs = _couplings(coeffs, "coeffs")
    _check_lines(n, coeffs, "coeffs")
    return DeltaPrimeCase(s_bar, coeffs).boundary()


def make_scale_invariant(n: int, t: Sequence[complex]) -> BoundaryPair:
    return make_delta(n, 0.0, t)


def make_case(params: CaseParameters) -> BoundaryPair:
    return params.boundary()
