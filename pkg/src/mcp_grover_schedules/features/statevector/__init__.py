# State-vector feature package for Grover Schedules MCP
from mcp_grover_schedules.features.statevector import tools


def register(mcp):
    """
    Register all state-vector components with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    tools.register_tools(mcp)
