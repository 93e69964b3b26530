# Grover Schedules MCP features package
from mcp_grover_schedules.features import (
    montecarlo,
    optimizer,
    prior,
    report,
    schedule,
    statevector,
)


def register_all(mcp):
    """
    Register all features with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    prior.register(mcp)
    schedule.register(mcp)
    optimizer.register(mcp)
    montecarlo.register(mcp)
    statevector.register(mcp)
    report.register(mcp)
