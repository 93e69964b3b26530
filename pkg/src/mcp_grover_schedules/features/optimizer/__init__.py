# Optimizer feature package for Grover Schedules MCP
from mcp_grover_schedules.features.optimizer import tools


def register(mcp):
    """
    Register all optimizer components with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    tools.register_tools(mcp)
