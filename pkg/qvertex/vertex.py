"""Vertex boundary conditions A psi + B psi' = 0 and their ST normal forms."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from .errors import AdmissibilityError, DimensionError, ParameterError, RankConsistencyError
from .linalg import (
    HERMITIAN_TOL,
    RANK_TOL,
    ComplexMatrix,
    RankReport,
    as_matrix,
    hermitian_part,
    is_hermitian,
    max_norm,
    permutation_matrix,
    rank_report,
    solve,
)

logger = logging.getLogger(__name__)

ADMISSIBILITY_TOL = 1e-9
# Lowest-index pivot is accepted if its residual is at least this fraction of the best one.
PIVOT_RATIO = 1e-3
COND_WARN = 1e8


@dataclass(frozen=True, eq=False)
class BoundaryPair:
    """Boundary matrices (A, B) of an n-line vertex."""

    a: ComplexMatrix
    b: ComplexMatrix

    def __post_init__(self) -> None:
        a = as_matrix(self.a, "A")
        b = as_matrix(self.b, "B")
        if a.shape[0] != a.shape[1] or b.shape != a.shape:
            raise DimensionError(
                f"A and B must be square and of equal size, got {a.shape} and {b.shape}"
            )
        if a.shape[0] < 1:
            raise DimensionError("A vertex needs at least one line")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.a.shape[0]

    def swapped(self) -> "BoundaryPair":
        """The pair (B, A): boundary condition B psi + A psi' = 0."""
        return BoundaryPair(self.b, self.a)

    def left_multiply(self, c: npt.ArrayLike) -> "BoundaryPair":
        """(C A, C B); describes the same vertex when C is invertible."""
        c = as_matrix(c, "C")
        return BoundaryPair(c @ self.a, c @ self.b)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the self-adjointness check."""

    ok: bool
    condition: str | None = None
    margin: float = 0.0
    message: str = "admissible"


def validate_admissible(
    pair: BoundaryPair, tol: float = ADMISSIBILITY_TOL, *, rank_tol: float = RANK_TOL
) -> AdmissibilityReport:
    """
    Check rank([A|B]) = n and that A B^dagger is Hermitian.

    The Hermitian test is relative to max(1, |A| |B|). The margin is the
    singular-value margin of the rank decision for a passing pair, the
    offending magnitude otherwise.
    """
    n = pair.n
    joined = rank_report(np.hstack([pair.a, pair.b]), rank_tol)
    if joined.rank != n:
        return AdmissibilityReport(
            ok=False,
            condition="rank",
            margin=float(joined.rank - n),
            message=f"rank([A|B]) = {joined.rank}, expected {n}",
        )

    product = pair.a @ pair.b.conj().T
    asymmetry = max_norm(product - product.conj().T)
    scale = max(1.0, max_norm(pair.a) * max_norm(pair.b))
    if asymmetry > tol * scale:
        return AdmissibilityReport(
            ok=False,
            condition="hermitian",
            margin=asymmetry,
            message=f"A B^dagger is not Hermitian (max asymmetry {asymmetry:.3e})",
        )
    return AdmissibilityReport(ok=True, margin=joined.margin)


def require_admissible(
    pair: BoundaryPair, tol: float = ADMISSIBILITY_TOL, *, rank_tol: float = RANK_TOL
) -> None:
    report = validate_admissible(pair, tol, rank_tol=rank_tol)
    if not report.ok:
        raise AdmissibilityError(report)


@dataclass(frozen=True, eq=False)
class STForm:
    """
    Normal form A = -[[S, 0], [-T^dagger, I]], B = [[I, T], [0, 0]].

    The blocks act on lines in template order; perm[i] is the (0-based) original
    line sitting at template position i.
    """

    s: ComplexMatrix
    t: ComplexMatrix
    perm: tuple[int, ...]
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        s = as_matrix(self.s, "S")
        t = as_matrix(self.t, "T")
        r = s.shape[0]
        if s.shape[1] != r:
            raise DimensionError(f"S must be square, got shape {s.shape}")
        if t.size == 0:
            t = np.zeros((r, max(len(self.perm) - r, 0)), dtype=np.complex128)
        if t.shape[0] != r:
            raise DimensionError(f"T must have {r} rows, got shape {t.shape}")
        n = r + t.shape[1]
        perm = tuple(int(i) for i in self.perm)
        if sorted(perm) != list(range(n)):
            raise DimensionError(f"perm must be a permutation of 0..{n - 1}, got {perm}")
        s.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "perm", perm)

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def r(self) -> int:
        """Size of the Hermitian block (rank of B for ST, rank of A for reverse ST)."""
        return self.s.shape[0]

    @classmethod
    def identity_order(
        cls, s: npt.ArrayLike, t: npt.ArrayLike, n: int | None = None
    ) -> "STForm":
        s = as_matrix(s, "S")
        t = as_matrix(t, "T")
        if n is None:
            n = s.shape[0] + t.shape[1]
        return cls(s, t, tuple(range(n)))


class ReverseSTForm(STForm):
    """
    Reverse normal form A = [[I, T], [0, 0]], B = -[[S, 0], [-T^dagger, I]].

    Here s holds S-bar (units of length) and t holds T-bar.
    """


class CaseLabel(str, Enum):
    """Rank-based vertex families for n = 2 and n = 3."""

    DIRICHLET_DISJOINT = "dirichlet-disjoint"
    FT_SCALE_INVARIANT = "ft-scale-invariant"
    DELTA_FAMILY = "delta-family"
    DELTA_PRIME_FAMILY = "delta-prime-family"
    MIXED_RANK22 = "mixed-rank22"
    GENERIC_RANK23 = "generic-rank23"
    GENERIC_RANK32 = "generic-rank32"
    NEUMANN_DISJOINT = "neumann-disjoint"
    GENERIC_FULL = "generic-full"
    PARTIAL_SCALE_INVARIANT = "partial-scale-invariant"


# (n, r_B, r_A) -> label
_CASE_TABLE: dict[tuple[int, int, int], CaseLabel] = {
    (2, 0, 2): CaseLabel.DIRICHLET_DISJOINT,
    (2, 1, 1): CaseLabel.FT_SCALE_INVARIANT,
    (2, 1, 2): CaseLabel.DELTA_FAMILY,
    (2, 2, 0): CaseLabel.NEUMANN_DISJOINT,
    (2, 2, 1): CaseLabel.DELTA_PRIME_FAMILY,
    (2, 2, 2): CaseLabel.GENERIC_FULL,
    (3, 0, 3): CaseLabel.DIRICHLET_DISJOINT,
    (3, 1, 2): CaseLabel.FT_SCALE_INVARIANT,
    (3, 1, 3): CaseLabel.DELTA_FAMILY,
    (3, 2, 1): CaseLabel.PARTIAL_SCALE_INVARIANT,
    (3, 2, 2): CaseLabel.MIXED_RANK22,
    (3, 2, 3): CaseLabel.GENERIC_RANK23,
    (3, 3, 0): CaseLabel.NEUMANN_DISJOINT,
    (3, 3, 1): CaseLabel.DELTA_PRIME_FAMILY,
    (3, 3, 2): CaseLabel.GENERIC_RANK32,
    (3, 3, 3): CaseLabel.GENERIC_FULL,
}


def case_label(n: int, r_b: int, r_a: int) -> CaseLabel | None:
    """Family of a vertex with the given ranks; None where no taxonomy exists."""
    return _CASE_TABLE.get((n, r_b, r_a))


@dataclass(frozen=True)
class VertexClass:
    """Rank triple of a vertex with its family label (None outside n = 2, 3)."""

    n: int
    r_a: int
    r_b: int
    r_s: int
    case_label: CaseLabel | None
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.r_a + self.r_b != self.n + self.r_s:
            raise RankConsistencyError(
                f"r_A + r_B = {self.r_a + self.r_b} but n + r_S = {self.n + self.r_s}"
            )
        if not 0 <= self.r_s <= min(self.r_a, self.r_b):
            raise RankConsistencyError(f"r_S = {self.r_s} outside [0, min(r_A, r_B)]")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.r_a, self.r_b, self.r_s)

    def describe(self) -> str:
        label = self.case_label.value if self.case_label else "generic"
        return f"(r_A, r_B, r_S) = {self.triple}, {label}"


def _pivot_lines(b: ComplexMatrix, r: int, order: list[int]) -> list[int]:
    """
    Pick r independent columns of b.

    Columns are tried in the given preference order; the first one whose
    residual against the already chosen columns reaches PIVOT_RATIO times the
    largest residual is taken.
    """
    chosen: list[int] = []
    for _ in range(r):
        candidates = [c for c in order if c not in chosen]
        columns = b[:, candidates]
        if chosen:
            q, _ = np.linalg.qr(b[:, chosen])
            columns = columns - q @ (q.conj().T @ columns)
        residuals = np.linalg.norm(columns, axis=0)
        best = float(residuals.max())
        pick = next(c for c, res in zip(candidates, residuals) if res >= PIVOT_RATIO * best)
        chosen.append(pick)
    return chosen


def _line_order(n: int, line_order: Sequence[int] | None) -> list[int]:
    if line_order is None:
        return list(range(n))
    order = [int(i) for i in line_order]
    if sorted(order) != list(range(n)):
        raise DimensionError(f"line_order must be a permutation of 0..{n - 1}, got {order}")
    return order


def to_st_form(
    pair: BoundaryPair,
    *,
    line_order: Sequence[int] | None = None,
    rank_tol: float = RANK_TOL,
) -> STForm:
    """
    Reduce (A, B) to ST form.

    With J the pivot lines of B and K the rest, C = diag(I, -I) [B_J | A_K]^-1
    brings (A, B) to the template; T and S are read off C B_K and C A_J.
    """
    require_admissible(pair, rank_tol=rank_tol)
    n = pair.n
    order = _line_order(n, line_order)
    r = rank_report(pair.b, rank_tol).rank
    pivots = _pivot_lines(pair.b, r, order)
    rest = [line for line in order if line not in pivots]
    perm = tuple(pivots + rest)
    logger.debug("ST reduction: r_B=%d, line order %s", r, perm)

    z = np.hstack([pair.b[:, pivots], pair.a[:, rest]])
    x = solve(z, np.hstack([pair.b[:, rest], pair.a[:, pivots]]))
    x_bk, x_aj = x[:, : n - r], x[:, n - r :]
    t = x_bk[:r, :]
    s = -x_aj[:r, :]

    warnings: list[str] = []
    residual = max(max_norm(x_bk[r:, :]), max_norm(x_aj[r:, :] + t.conj().T))
    if residual > 1e-8 * max(1.0, max_norm(x)):
        warnings.append(f"template residual {residual:.2e} after reduction")
    cond = float(np.linalg.cond(z))
    if cond > COND_WARN:
        warnings.append(f"ill-conditioned reduction (cond {cond:.2e})")

    asymmetry = max_norm(s - s.conj().T)
    if asymmetry > HERMITIAN_TOL * max(1.0, max_norm(s)):
        raise AdmissibilityError(
            AdmissibilityReport(
                ok=False,
                condition="hermitian",
                margin=asymmetry,
                message=f"reduced S is not Hermitian (max asymmetry {asymmetry:.3e})",
            )
        )
    s = hermitian_part(s)

    for message in warnings:
        logger.warning(message)
    return STForm(s, t, perm, tuple(warnings))


def to_reverse_st_form(
    pair: BoundaryPair,
    *,
    line_order: Sequence[int] | None = None,
    rank_tol: float = RANK_TOL,
) -> ReverseSTForm:
    """Reduce (A, B) to reverse ST form: the ST form of (B, A) with roles exchanged."""
    form = to_st_form(pair.swapped(), line_order=line_order, rank_tol=rank_tol)
    return ReverseSTForm(form.s, form.t, form.perm, form.warnings)


def _template(form: STForm) -> tuple[ComplexMatrix, ComplexMatrix]:
    r, n = form.r, form.n
    identity_r = np.eye(r, dtype=np.complex128)
    identity_rest = np.eye(n - r, dtype=np.complex128)
    upper = np.hstack([identity_r, form.t])
    lower = np.zeros((n - r, n), dtype=np.complex128)
    coupling = np.vstack([upper, lower])
    hermitian = -np.block(
        [
            [form.s, np.zeros((r, n - r), dtype=np.complex128)],
            [-form.t.conj().T, identity_rest],
        ]
    )
    return hermitian, coupling


def assemble_boundary(form: STForm) -> BoundaryPair:
    """Emit the templated (A, B) of an ST or reverse ST form, lines in original order."""
    if not is_hermitian(form.s, HERMITIAN_TOL * max(1.0, max_norm(form.s))):
        raise ParameterError("The S block of a normal form must be Hermitian")
    hermitian, coupling = _template(form)
    back = permutation_matrix(form.perm).T
    if isinstance(form, ReverseSTForm):
        return BoundaryPair(coupling @ back, hermitian @ back)
    return BoundaryPair(hermitian @ back, coupling @ back)


def permute_lines(pair: BoundaryPair, order: Sequence[int]) -> BoundaryPair:
    """Relabel lines: old line i becomes new line order[i] (0-based)."""
    order = _line_order(pair.n, order)
    back = permutation_matrix(tuple(order)).T
    return BoundaryPair(pair.a @ back, pair.b @ back)


def _block_rank(form: STForm, tol: float) -> RankReport:
    """Rank of the S block, measured against the norm of its templated [A | B]."""
    hermitian, coupling = _template(form)
    scale = float(np.linalg.norm(np.hstack([hermitian, coupling]), 2))
    return rank_report(form.s, tol, scale=scale)


def classify(pair: BoundaryPair, tol: float = RANK_TOL) -> VertexClass:
    """
    Rank triple (r_A, r_B, r_S) and family label of a vertex.

    r_S = r_A + r_B - n. The ranks of S and S-bar are cross-checked against it;
    a mismatch near the rank threshold is reported as a warning.
    """
    require_admissible(pair, rank_tol=tol)
    n = pair.n
    report_a = rank_report(pair.a, tol)
    report_b = rank_report(pair.b, tol)
    st = to_st_form(pair, rank_tol=tol)
    reverse = to_reverse_st_form(pair, rank_tol=tol)
    report_s = _block_rank(st, tol)
    report_s_bar = _block_rank(reverse, tol)

    r_s = report_a.rank + report_b.rank - n
    if not 0 <= r_s <= min(report_a.rank, report_b.rank):
        raise RankConsistencyError(
            f"rank(A) = {report_a.rank} and rank(B) = {report_b.rank} leave no valid r_S"
        )

    warnings = list(st.warnings)
    for name, report in (("A", report_a), ("B", report_b), ("S", report_s)):
        if report.ambiguous:
            warnings.append(
                f"rank({name}) = {report.rank} is ambiguous (margin {report.margin:.2g})"
            )
    if report_s.rank != r_s or report_s_bar.rank != r_s:
        warnings.append(
            f"rank(S) = {report_s.rank} and rank(S-bar) = {report_s_bar.rank} "
            f"differ from r_A + r_B - n = {r_s}"
        )
    for message in warnings:
        logger.warning(message)

    return VertexClass(
        n=n,
        r_a=report_a.rank,
        r_b=report_b.rank,
        r_s=r_s,
        case_label=case_label(n, report_b.rank, report_a.rank),
        warnings=tuple(warnings),
    )
