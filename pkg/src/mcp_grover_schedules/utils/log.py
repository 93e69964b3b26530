"""
Logging setup shared by the CLI and the MCP server.
"""
import logging
from typing import Optional

from mcp_grover_schedules.utils.config import Settings, get_settings

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(settings: Optional[Settings] = None) -> None:
    """
    Configure the root logger from the settings.
    
    Args:
        settings: Settings to use; read from the environment when omitted
    """
    settings = settings or get_settings()
    kwargs = {
        "level": getattr(logging, settings.log_level),
        "format": LOG_FORMAT,
    }
    if settings.log_file:
        kwargs["filename"] = settings.log_file
    logging.basicConfig(**kwargs)
