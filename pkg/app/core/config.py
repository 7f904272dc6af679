"""Application configuration using pydantic-settings.

This module provides centralized configuration management:
- Environment variable loading (and .env file) for library use
- Type-safe settings with validation
- Cached settings instance with @lru_cache
- A flag-only variant for the command line, which never reads the environment
"""

from functools import lru_cache
from typing import Any

from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

from app.shared.hpreal.hpreal_models import PrecisionContext


class Settings(BaseSettings):
    """Library-wide configuration.

    All settings can be overridden via environment variables.
    Environment variables are case-insensitive.
    Settings are loaded from .env file if present.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        # Don't fail if .env file doesn't exist
        extra="ignore",
    )

    # Logging
    log_level: str = "WARNING"

    # Working precision
    working_digits: int = Field(default=50, ge=1)
    guard_digits: int = Field(default=10, ge=1)

    # Engine defaults
    em_s_max: int = Field(default=5, ge=0)
    romberg_s_max: int = Field(default=3, ge=0)

    # evaluate_constant escalation schedule, tried as (N, s_max) in nested order
    escalation_switch_indices: list[int] = [20, 40, 80, 160]
    escalation_s_max: list[int] = [5, 7]

    def precision(self) -> PrecisionContext:
        """Build the precision context described by the digits fields."""
        return PrecisionContext(working_digits=self.working_digits, guard_digits=self.guard_digits)


class CliSettings(Settings):
    """Settings whose only source is explicit constructor arguments.

    The command line passes every behavior-affecting value as a flag, so output
    never depends on the environment of the calling shell.
    """

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        del settings_cls, env_settings, dotenv_settings, file_secret_settings
        return (init_settings,)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    The @lru_cache decorator ensures settings are only loaded once
    and reused across the process.

    Returns:
        The library settings instance.
    """
    return Settings()


def get_cli_settings(**overrides: Any) -> CliSettings:
    """Build settings for one command-line invocation.

    Args:
        **overrides: Values taken from command-line flags.

    Returns:
        Settings built from defaults and the given overrides only.
    """
    return CliSettings(**overrides)
