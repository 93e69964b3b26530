"""
MCP Grover Schedules - cost-optimal multi-step Grover search schedules for
search sets with a known prior distribution over the solution index.
"""

import importlib.metadata

try:
    __version__ = importlib.metadata.version("mcp-grover-schedules")
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0"
