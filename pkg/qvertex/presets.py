"""Pinned parameter sets reproducing the published Y-junction figures."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cases import (
    CaseParameters,
    DeltaCase,
    DeltaPrimeCase,
    HermitianCase,
    MixedRankCase,
    RankTwoBCase,
)
from .errors import ParameterError

ROOT_HALF = 1 / math.sqrt(2)


@dataclass(frozen=True)
class Preset:
    name: str
    caption: str
    template: str
    case: CaseParameters


_PRESETS = (
    # t2 = t3 = 1/sqrt(2), s = 2
    Preset(
        "fig2",
        "pure delta, t2 = t3 = 1/√2, s = 2",
        "delta",
        DeltaCase(2.0, (ROOT_HALF, ROOT_HALF)),
    ),
    # t1 = t2 = 1/sqrt(2), s11 = s12 = s22 = 1
    Preset(
        "fig4",
        "δ–δ–δ′, t1 = t2 = 1/√2, s11 = s12 = s22 = 1",
        "mixed",
        MixedRankCase.from_entries(1.0, 1.0, 1.0, ROOT_HALF, ROOT_HALF),
    ),
    # t1 = 1/3, t2 = 0, s11 = 6, s12 = 2, s22 = 2/3
    Preset(
        "fig5",
        "δ–δ′–δ′, t1 = 1/3, t2 = 0, s11 = 6, s12 = 2, s22 = 2/3",
        "mixed",
        MixedRankCase.from_entries(6.0, 2.0, 2 / 3, 1 / 3, 0.0),
    ),
    # t1 = t2 = 1/sqrt(2), s11 = s12 = 1, s22 = -2
    Preset(
        "fig6",
        "rank(B) = 2, rank(A) = 3, t1 = t2 = 1/√2, s11 = s12 = 1, s22 = -2",
        "rank2b",
        RankTwoBCase(1.0, 1.0, -2.0, ROOT_HALF, ROOT_HALF),
    ),
    # s11 = s12 = s13 = s22 = s23 = s33 = 1
    Preset(
        "fig8",
        "generalized pure δ′, all s_ij = 1",
        "delta_prime",
        DeltaPrimeCase(1.0, (1.0, 1.0)),
    ),
    # s11 = s12 = s22 = s33 = 1, s13 = s23 = 2
    Preset(
        "fig9",
        "rank(B) = 3, rank(A) = 2, s11 = s12 = s22 = s33 = 1, s13 = s23 = 2",
        "hermitian",
        HermitianCase.from_upper(
            {"s11": 1, "s12": 1, "s13": 2, "s22": 1, "s23": 2, "s33": 1}
        ),
    ),
    # s11 = -1/3, s12 = -1, s13 = 1, s22 = 1, s23 = -3, s33 = -4
    Preset(
        "fig10",
        "generic, s11 = -1/3, s12 = -1, s13 = 1, s22 = 1, s23 = -3, s33 = -4",
        "hermitian",
        HermitianCase.from_upper(
            {"s11": -1 / 3, "s12": -1, "s13": 1, "s22": 1, "s23": -3, "s33": -4}
        ),
    ),
)

PRESETS: dict[str, Preset] = {preset.name: preset for preset in _PRESETS}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise ParameterError(
            f"Unknown preset {name!r}; choose one of {', '.join(PRESETS)}"
        ) from None
