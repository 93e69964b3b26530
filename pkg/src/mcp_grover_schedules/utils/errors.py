"""
Base exception for the package.

Every feature derives its own error class from this one so callers can
catch all library failures in one place.
"""


class GroverScheduleError(Exception):
    """Base class for errors raised by mcp_grover_schedules."""
    pass


class ConfigError(GroverScheduleError):
    """Exception raised for invalid configuration values."""
    pass
