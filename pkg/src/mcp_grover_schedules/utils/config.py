"""
Configuration utilities.

This module reads the package settings from environment variables.
"""
import os
from dataclasses import dataclass, replace
from typing import Optional

from mcp_grover_schedules.utils.errors import ConfigError

ENV_PREFIX = "GROVER_SCHEDULES_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _check_level(level: str) -> str:
    level = level.upper()
    if level not in LOG_LEVELS:
        raise ConfigError(f"not a log level: {level}")
    return level


@dataclass(frozen=True)
class Settings:
    """Settings resolved from the environment."""
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    steps: int = 10
    tol: float = 1e-6
    max_outer: int = 10000

    def with_log_level(self, level: str) -> "Settings":
        return replace(self, log_level=_check_level(level))


def _read(name: str) -> Optional[str]:
    value = os.environ.get(ENV_PREFIX + name)
    if value is None or not value.strip():
        return None
    return value.strip()


def _read_int(name: str, default: int) -> int:
    raw = _read(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(
            f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ConfigError(f"{ENV_PREFIX}{name} must be positive")
    return value


def _read_float(name: str, default: float) -> float:
    raw = _read(name)
    if raw is None:
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(
            f"{ENV_PREFIX}{name} must be a number, got {raw!r}")
    if not value > 0:
        raise ConfigError(f"{ENV_PREFIX}{name} must be positive")
    return value


def get_settings() -> Settings:
    """
    Get the package settings from environment variables.
    
    Returns:
        Settings instance with defaults for unset variables
        
    Raises:
        ConfigError: If a variable is set to an invalid value
    """
    try:
        level = _check_level(_read("LOG_LEVEL") or "WARNING")
    except ConfigError as e:
        raise ConfigError(f"{ENV_PREFIX}LOG_LEVEL: {e}")
    return Settings(
        log_level=level,
        log_file=_read("LOG_FILE"),
        steps=_read_int("STEPS", 10),
        tol=_read_float("TOL", 1e-6),
        max_outer=_read_int("MAX_OUTER", 10000),
    )
