# Schedule feature package for Grover Schedules MCP
from mcp_grover_schedules.features.schedule import tools


def register(mcp):
    """
    Register all schedule components with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    tools.register_tools(mcp)
