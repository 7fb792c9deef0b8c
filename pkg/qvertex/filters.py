"""Pair-coupling classification and design of three-line branching filters."""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

import numpy as np

from .cases import CaseParameters, DeltaCase, DeltaPrimeCase, MixedRankCase, Pair
from .errors import FilterSpecError
from .scattering import AsymptoticLimits, asymptotic_limits, s_matrix_at
from .vertex import BoundaryPair, permute_lines, require_admissible

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 1e-3
# Recipe with an indirect path: its zero limit is only approximately zero.
SOFT_EPSILON = 0.2
GRID = np.logspace(-3, 3, 20)
CYCLIC_PAIRS: tuple[Pair, ...] = ((1, 2), (2, 3), (3, 1))


class CouplingKind(str, Enum):
    DELTA_LIKE = "delta_like"
    DELTA_PRIME_LIKE = "delta_prime_like"
    SCALE_INVARIANT = "scale_invariant"
    MIXED = "mixed"
    DISCONNECTED = "disconnected"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def filter_type(self) -> str:
        return _FILTER_TYPES[self]


_SYMBOLS = {
    CouplingKind.DELTA_LIKE: "δ",
    CouplingKind.DELTA_PRIME_LIKE: "δ′",
    CouplingKind.SCALE_INVARIANT: "ft",
    CouplingKind.MIXED: "δ+δ′",
    CouplingKind.DISCONNECTED: "×",
}

_FILTER_TYPES = {
    CouplingKind.DELTA_LIKE: "high-pass",
    CouplingKind.DELTA_PRIME_LIKE: "low-pass",
    CouplingKind.SCALE_INVARIANT: "all-pass",
    CouplingKind.MIXED: "band-suppressing",
    CouplingKind.DISCONNECTED: "blocked",
}


class PassBand(str, Enum):
    HIGH = "high"
    LOW = "low"

    @property
    def kind(self) -> CouplingKind:
        return CouplingKind.DELTA_LIKE if self is PassBand.HIGH else CouplingKind.DELTA_PRIME_LIKE


@dataclass(frozen=True)
class PairCoupling:
    """How lines i and j are connected, judged from |T_ij| at k -> 0 and k -> infinity."""

    i: int
    j: int
    kind: CouplingKind
    t0: float
    tinf: float
    epsilon: float
    peak: float = 0.0
    warnings: tuple[str, ...] = ()

    @property
    def pair(self) -> Pair:
        return (self.i, self.j)


def coupling_pairs(n: int) -> tuple[Pair, ...]:
    """(1, 2), (2, 3), (3, 1) for n = 3, otherwise all (i, j) with i < j."""
    if n == 3:
        return CYCLIC_PAIRS
    return tuple((i, j) for i, j in combinations(range(1, n + 1), 2))


def coupling_kind(
    t0: float, tinf: float, samples: np.ndarray, epsilon: float = DEFAULT_EPSILON
) -> CouplingKind:
    """
    Decide the coupling kind of one pair.

    A limit counts as zero when it is at most epsilon times the peak magnitude
    over the samples and both limits. When neither limit vanishes the larger one
    decides, unless |T| is flat to within epsilon.
    """
    values = np.concatenate([np.asarray(samples, dtype=float), [t0, tinf]])
    peak = float(values.max())
    low = float(values.min())
    if peak <= epsilon:
        return CouplingKind.DISCONNECTED
    zero0 = t0 <= epsilon * peak
    zero_inf = tinf <= epsilon * peak
    if zero0 and zero_inf:
        return CouplingKind.MIXED
    if zero0:
        return CouplingKind.DELTA_LIKE
    if zero_inf:
        return CouplingKind.DELTA_PRIME_LIKE
    if (peak - low) / peak < epsilon:
        return CouplingKind.SCALE_INVARIANT
    if t0 > tinf:
        return CouplingKind.DELTA_PRIME_LIKE
    if t0 < tinf:
        return CouplingKind.DELTA_LIKE
    return CouplingKind.MIXED


def pair_coupling_class(
    pair: BoundaryPair,
    epsilon: float = DEFAULT_EPSILON,
    *,
    limits: AsymptoticLimits | None = None,
) -> list[PairCoupling]:
    """Coupling kind of every line pair of an admissible vertex."""
    if not epsilon > 0:
        raise FilterSpecError(f"epsilon must be positive, got {epsilon}")
    require_admissible(pair)
    if limits is None:
        limits = asymptotic_limits(pair)
    grid = np.abs(np.stack([s_matrix_at(pair, k) for k in GRID]))

    couplings = []
    for i, j in coupling_pairs(pair.n):
        t0 = abs(limits.t0(i, j))
        tinf = abs(limits.tinf(i, j))
        samples = grid[:, i - 1, j - 1]
        kind = coupling_kind(t0, tinf, samples, epsilon)
        logger.debug("pair (%d, %d): t0=%.3g tinf=%.3g -> %s", i, j, t0, tinf, kind.value)
        couplings.append(
            PairCoupling(
                i=i,
                j=j,
                kind=kind,
                t0=t0,
                tinf=tinf,
                epsilon=epsilon,
                peak=float(max(samples.max(), t0, tinf)),
                warnings=limits.warnings,
            )
        )
    return couplings


def connection_pattern(couplings: list[PairCoupling]) -> str:
    """Pattern string such as 'δ–δ–δ′', delta-like pairs first."""
    order = list(CouplingKind)
    kinds = sorted((c.kind for c in couplings), key=order.index)
    return "–".join(kind.symbol for kind in kinds)


def _pair_key(raw: str | Pair) -> Pair:
    if isinstance(raw, str):
        digits = raw.strip().replace(",", "").replace("-", "").replace(" ", "")
        if len(digits) != 2 or not digits.isdigit():
            raise FilterSpecError(f"pair key must name two lines like '12', got {raw!r}")
        raw = (int(digits[0]), int(digits[1]))
    i, j = raw
    if i == j or not {i, j} <= {1, 2, 3}:
        raise FilterSpecError(f"pair must join two distinct lines of 1..3, got {raw!r}")
    return next(p for p in CYCLIC_PAIRS if set(p) == {i, j})


@dataclass(frozen=True)
class FilterSpec:
    """Requested pass band for each of the pairs (1, 2), (2, 3), (3, 1)."""

    bands: dict[Pair, PassBand]
    targets: dict[Pair, float] = field(default_factory=dict)
    epsilon: float | None = None

    @classmethod
    def from_mapping(
        cls,
        pairs: Mapping[str | Pair, str | PassBand],
        targets: Mapping[str | Pair, float] | None = None,
        epsilon: float | None = None,
    ) -> "FilterSpec":
        bands: dict[Pair, PassBand] = {}
        for raw, band in pairs.items():
            key = _pair_key(raw)
            if key in bands:
                raise FilterSpecError(f"pair {key[0]}{key[1]} is given more than once")
            try:
                bands[key] = PassBand(str(band.value if isinstance(band, PassBand) else band))
            except ValueError:
                raise FilterSpecError(
                    f"pass band for {key[0]}{key[1]} must be 'low' or 'high', got {band!r}"
                ) from None
        missing = [p for p in CYCLIC_PAIRS if p not in bands]
        if missing:
            names = ", ".join(f"{i}{j}" for i, j in missing)
            raise FilterSpecError(f"filter spec is missing pair(s) {names}")

        parsed_targets: dict[Pair, float] = {}
        for raw, value in (targets or {}).items():
            value = float(value)
            if not 0 <= value <= 1 or math.isnan(value):
                raise FilterSpecError(f"target for {raw} must lie in [0, 1], got {value}")
            parsed_targets[_pair_key(raw)] = value
        if epsilon is not None and not epsilon > 0:
            raise FilterSpecError(f"epsilon must be positive, got {epsilon}")
        return cls(bands, parsed_targets, epsilon)

    def count(self, band: PassBand) -> int:
        return sum(1 for b in self.bands.values() if b is band)

    def pairs_with(self, band: PassBand) -> list[Pair]:
        return [p for p in CYCLIC_PAIRS if self.bands[p] is band]


@dataclass(frozen=True)
class TargetReport:
    """Achieved pass-band level |T_ij|^2 against a requested one."""

    pair: Pair
    target: float
    achieved: float

    @property
    def deviation(self) -> float:
        return self.achieved - self.target


@dataclass(frozen=True)
class FilterDesign:
    """A designed vertex with the couplings it actually achieves."""

    pair: BoundaryPair
    case: CaseParameters
    order: tuple[int, ...]
    recipe: str
    epsilon: float
    couplings: list[PairCoupling]
    targets: list[TargetReport]
    spec: FilterSpec

    @property
    def pattern(self) -> str:
        return connection_pattern(self.couplings)

    @property
    def matches(self) -> bool:
        achieved = {c.pair: c.kind for c in self.couplings}
        return all(achieved[p] is band.kind for p, band in self.spec.bands.items())


def _third(pair: Pair) -> int:
    return ({1, 2, 3} - set(pair)).pop()


def design_branching_filter(spec: FilterSpec) -> FilterDesign:
    """
    Pick a vertex family realising the requested high/low pass pattern.

    Uniform patterns use the delta (all high) or delta-prime (all low) vertex.
    With one low-pass pair the rank-one mixed vertex with t-bar_3 = 0 is used,
    its low-pass pair (1, 2) moved onto the requested pair. With one high-pass
    pair the mixed vertex with t2 = 0 and small c is used, its high-pass pair
    (3, 1) moved onto the requested one.
    """
    highs = spec.count(PassBand.HIGH)
    root = 1 / math.sqrt(2)
    if highs == 3:
        case: CaseParameters = DeltaCase(2.0, (root, root))
        order, recipe, epsilon = (0, 1, 2), "delta", DEFAULT_EPSILON
    elif highs == 0:
        case = DeltaPrimeCase(1.0, (1.0, 1.0))
        order, recipe, epsilon = (0, 1, 2), "delta_prime", DEFAULT_EPSILON
    elif highs == 2:
        a, b = spec.pairs_with(PassBand.LOW)[0]
        case = MixedRankCase(s=1.0, c=1.0, t1=root, t2=root)
        # template lines 1, 2, 3 -> a, b, third
        order = (a - 1, b - 1, _third((a, b)) - 1)
        recipe, epsilon = "delta_delta_delta_prime", DEFAULT_EPSILON
    else:
        a, b = spec.pairs_with(PassBand.HIGH)[0]
        case = MixedRankCase(s=6.0, c=1 / 3, t1=1 / 3, t2=0.0)
        # template lines 3, 1, 2 -> a, b, third
        order = (b - 1, _third((a, b)) - 1, a - 1)
        recipe, epsilon = "delta_prime_delta_prime_delta", SOFT_EPSILON
    if spec.epsilon is not None:
        epsilon = spec.epsilon

    pair = permute_lines(case.boundary(), order)
    couplings = pair_coupling_class(pair, epsilon)
    by_pair = {c.pair: c for c in couplings}
    targets = []
    for key, target in spec.targets.items():
        coupling = by_pair[key]
        level = coupling.tinf if spec.bands[key] is PassBand.HIGH else coupling.t0
        targets.append(TargetReport(key, target, level**2))

    design = FilterDesign(pair, case, order, recipe, epsilon, couplings, targets, spec)
    if not design.matches:
        logger.warning("design %s does not reach the requested pattern at ε=%g", recipe, epsilon)
    return design
