"""
Grover Schedules MCP Server

An MCP server that computes optimal multi-step Grover search schedules
for known priors over the search set.
"""
import argparse

from mcp.server.fastmcp import FastMCP

from mcp_grover_schedules.features import register_all
from mcp_grover_schedules.utils import register_all_prompts
from mcp_grover_schedules.utils.config import get_settings
from mcp_grover_schedules.utils.log import configure_logging

# Create a FastMCP server instance with a name
mcp = FastMCP("Grover Schedules")

# Register all features
register_all(mcp)
register_all_prompts(mcp)


def main():
    """Entry point for the command-line script."""
    parser = argparse.ArgumentParser(
        description="Run the Grover Schedules MCP server")
    parser.add_argument("--log-level", default=None,
                        help="Override GROVER_SCHEDULES_LOG_LEVEL")
    args = parser.parse_args()

    settings = get_settings()
    if args.log_level:
        settings = settings.with_log_level(args.log_level)
    configure_logging(settings)

    # Start the server
    mcp.run()


if __name__ == "__main__":
    main()
