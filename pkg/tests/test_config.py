import logging
from unittest.mock import patch

import pytest

from mcp_grover_schedules.utils.config import Settings, get_settings
from mcp_grover_schedules.utils.errors import ConfigError
from mcp_grover_schedules.utils.log import LOG_FORMAT, configure_logging

VARIABLES = ("LOG_LEVEL", "LOG_FILE", "STEPS", "TOL", "MAX_OUTER")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in VARIABLES:
        monkeypatch.delenv(f"GROVER_SCHEDULES_{name}", raising=False)


def test_get_settings_defaults():
    """Test the settings with no variables set."""
    assert get_settings() == Settings()


def test_get_settings_from_environment(monkeypatch):
    """Test that variables override the defaults."""
    monkeypatch.setenv("GROVER_SCHEDULES_LOG_LEVEL", "debug")
    monkeypatch.setenv("GROVER_SCHEDULES_LOG_FILE", "/tmp/grover.log")
    monkeypatch.setenv("GROVER_SCHEDULES_STEPS", "6")
    monkeypatch.setenv("GROVER_SCHEDULES_TOL", "1e-9")
    monkeypatch.setenv("GROVER_SCHEDULES_MAX_OUTER", "25")
    
    settings = get_settings()
    
    assert settings == Settings(log_level="DEBUG",
                                log_file="/tmp/grover.log", steps=6,
                                tol=1e-9, max_outer=25)


@pytest.mark.parametrize("name,value", [
    ("LOG_LEVEL", "chatty"),
    ("STEPS", "ten"),
    ("STEPS", "0"),
    ("TOL", "-1"),
    ("MAX_OUTER", "1.5"),
])
def test_get_settings_invalid_values(monkeypatch, name, value):
    """Test that invalid variables raise ConfigError naming them."""
    monkeypatch.setenv(f"GROVER_SCHEDULES_{name}", value)
    
    with pytest.raises(ConfigError, match=f"GROVER_SCHEDULES_{name}"):
        get_settings()


def test_with_log_level():
    """Test overriding the log level of existing settings."""
    assert Settings().with_log_level("info").log_level == "INFO"
    with pytest.raises(ConfigError):
        Settings().with_log_level("loud")


def test_configure_logging():
    """Test the arguments passed to logging.basicConfig."""
    settings = Settings(log_level="INFO", log_file="run.log")
    
    with patch("logging.basicConfig") as basic_config:
        configure_logging(settings)
    
    basic_config.assert_called_once_with(level=logging.INFO,
                                         format=LOG_FORMAT,
                                         filename="run.log")
