"""Runtime settings read from the environment."""

import math
import os
from dataclasses import dataclass

from .errors import ConfigError

RANK_TOL_ENV = "QVERTEX_RANK_TOL"
EPSILON_ENV = "QVERTEX_EPSILON"


@dataclass(frozen=True)
class Settings:
    """Numerical defaults shared by the CLI commands."""

    rank_tol: float = 1e-9
    epsilon: float = 1e-3
    kmin: float = 1e-2
    kmax: float = 1e2
    points: int = 400

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build settings, letting environment variables override the defaults.

        Recognised variables: QVERTEX_RANK_TOL, QVERTEX_EPSILON.
        """
        defaults = cls()
        return cls(
            rank_tol=_positive_float(RANK_TOL_ENV, defaults.rank_tol),
            epsilon=_positive_float(EPSILON_ENV, defaults.epsilon),
        )


def _positive_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise ConfigError(f"{name} must be positive, got {raw!r}")
    return value
