"""Tests for run configuration."""

import pytest
from pydantic import ValidationError

from src.config import DEFAULT_MAX_TRIPLES, MAX_TRIPLES_ENV, RunConfig, Tolerances, max_triples


class TestMaxTriples:
    """Tests for the enumeration cap lookup."""

    def test_default(self, monkeypatch):
        """Test the default cap without the variable."""
        monkeypatch.delenv(MAX_TRIPLES_ENV, raising=False)
        assert max_triples() == DEFAULT_MAX_TRIPLES == 24

    def test_override(self, monkeypatch):
        """Test a positive integer overrides the cap."""
        monkeypatch.setenv(MAX_TRIPLES_ENV, "30")
        assert max_triples() == 30

    @pytest.mark.parametrize("raw", ["lots", "-1"])
    def test_invalid_values_ignored(self, monkeypatch, raw):
        """Test unusable values fall back to the default."""
        monkeypatch.setenv(MAX_TRIPLES_ENV, raw)
        assert max_triples() == DEFAULT_MAX_TRIPLES


class TestRunConfig:
    """Tests for RunConfig validation."""

    def test_defaults(self, monkeypatch):
        """Test defaults pick up the environment cap."""
        monkeypatch.setenv(MAX_TRIPLES_ENV, "12")
        config = RunConfig()
        assert config.format == "text"
        assert config.horizon == 10_000
        assert config.max_triples == 12
        assert config.tolerances.cesaro == 1e-3

    def test_rejects_bad_format(self):
        """Test only text, json and csv are accepted."""
        with pytest.raises(ValidationError):
            RunConfig(format="xml")

    def test_rejects_zero_horizon(self):
        """Test the horizon must be positive."""
        with pytest.raises(ValidationError):
            RunConfig(horizon=0)

    def test_tolerance_update(self):
        """Test model_copy applies overrides and keeps the rest."""
        tol = Tolerances().model_copy(update={"limit": 1e-6})
        assert tol.limit == 1e-6
        assert tol.cluster == 1e-8
