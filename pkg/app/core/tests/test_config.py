"""Tests for app.core.config module."""

import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from app.core.config import Settings, get_cli_settings, get_settings


def test_settings_defaults() -> None:
    """Test Settings instantiation with default values."""
    with patch.dict(os.environ, {"LOG_LEVEL": "WARNING"}):
        settings = Settings()

        assert settings.log_level == "WARNING"
        assert settings.working_digits == 50
        assert settings.guard_digits == 10
        assert settings.em_s_max == 5
        assert settings.romberg_s_max == 3
        assert settings.escalation_switch_indices == [20, 40, 80, 160]
        assert settings.escalation_s_max == [5, 7]


def test_settings_from_environment() -> None:
    """Test Settings can be overridden by environment variables."""
    with patch.dict(
        os.environ,
        {
            "WORKING_DIGITS": "80",
            "GUARD_DIGITS": "20",
            "ESCALATION_SWITCH_INDICES": "[40, 80]",
            "LOG_LEVEL": "DEBUG",
        },
    ):
        settings = Settings()

        assert settings.working_digits == 80
        assert settings.guard_digits == 20
        assert settings.escalation_switch_indices == [40, 80]
        assert settings.log_level == "DEBUG"


def test_settings_case_insensitive() -> None:
    """Test settings are case-insensitive."""
    with patch.dict(os.environ, {"working_digits": "70"}):
        assert Settings().working_digits == 70


def test_settings_reject_non_positive_digits() -> None:
    """Working digits must be positive."""
    with pytest.raises(ValidationError):
        Settings(working_digits=0)


def test_settings_precision() -> None:
    """precision() carries both digit fields."""
    ctx = Settings(working_digits=30, guard_digits=5).precision()

    assert ctx.working_digits == 30
    assert ctx.guard_digits == 5
    assert ctx.dps == 35


def test_get_settings_caching() -> None:
    """Test get_settings() returns cached instance."""
    get_settings.cache_clear()

    settings1 = get_settings()
    settings2 = get_settings()

    assert settings1 is settings2


def test_cli_settings_ignore_environment() -> None:
    """Command-line settings come from explicit arguments only."""
    with patch.dict(os.environ, {"WORKING_DIGITS": "80", "EM_S_MAX": "9"}):
        settings = get_cli_settings(guard_digits=12)

        assert settings.working_digits == 50
        assert settings.em_s_max == 5
        assert settings.guard_digits == 12


def test_cli_settings_validate_overrides() -> None:
    """Invalid flag values surface as a ValidationError."""
    with pytest.raises(ValidationError):
        get_cli_settings(working_digits=-3)
