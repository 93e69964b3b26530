"""
Main entry point for running the Grover schedules MCP server as a module.

This allows running the server with:
    python -m mcp_grover_schedules
"""
from mcp_grover_schedules.server import main

if __name__ == "__main__":
    main()
