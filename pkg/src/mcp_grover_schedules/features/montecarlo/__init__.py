# Monte-Carlo feature package for Grover Schedules MCP
from mcp_grover_schedules.features.montecarlo import tools


def register(mcp):
    """
    Register all monte-carlo components with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    tools.register_tools(mcp)
