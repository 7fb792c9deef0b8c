"""Tests for environment settings."""

import pytest

from qvertex.config import EPSILON_ENV, RANK_TOL_ENV, Settings
from qvertex.errors import ConfigError


class TestSettings:
    """Tests for Settings.from_env."""

    def test_defaults(self, monkeypatch):
        """Without variables the defaults are used."""
        monkeypatch.delenv(RANK_TOL_ENV, raising=False)
        monkeypatch.delenv(EPSILON_ENV, raising=False)
        settings = Settings.from_env()
        assert settings.rank_tol == 1e-9
        assert settings.epsilon == 1e-3
        assert settings.points == 400

    def test_override(self, monkeypatch):
        """Variables override the defaults."""
        monkeypatch.setenv(RANK_TOL_ENV, "1e-8")
        monkeypatch.setenv(EPSILON_ENV, "0.2")
        settings = Settings.from_env()
        assert settings.rank_tol == 1e-8
        assert settings.epsilon == 0.2

    @pytest.mark.parametrize("raw", ["abc", "-1", "0", "inf"])
    def test_invalid(self, monkeypatch, raw):
        """Non-numeric or non-positive values are rejected."""
        monkeypatch.setenv(EPSILON_ENV, raw)
        with pytest.raises(ConfigError):
            Settings.from_env()
