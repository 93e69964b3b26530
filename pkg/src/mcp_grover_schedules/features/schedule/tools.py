"""
Schedule tools.

This module provides MCP tools for evaluating saved schedules.
"""
from typing import Optional

from mcp_grover_schedules.features.prior.common import Prior, PriorError
from mcp_grover_schedules.features.prior.distributions import load_prior
from mcp_grover_schedules.features.schedule.common import (
    Schedule,
    ScheduleError,
)
from mcp_grover_schedules.features.schedule.cost import expected_cost
from mcp_grover_schedules.features.schedule.formatting import (
    format_cost_report,
)
from mcp_grover_schedules.features.schedule.io import read_schedule


def _evaluate_schedule_impl(schedule: Schedule, prior: Prior) -> str:
    """
    Implementation of schedule evaluation.
    
    Args:
        schedule: Schedule to evaluate
        prior: Prior over the same search set
            
    Returns:
        Formatted cost report
    """
    try:
        cost = expected_cost(schedule, prior)
        return format_cost_report(schedule, prior, cost)
    except Exception as e:
        return f"Error evaluating schedule: {str(e)}"


def register_tools(mcp) -> None:
    """
    Register schedule tools with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    
    @mcp.tool()
    def evaluate_schedule(
        plan: str,
        dist: str,
        size: int,
        permute_seed: Optional[int] = None,
    ) -> str:
        """
        Computes the expected Grover iteration count of a saved schedule.
        
        Use this tool when you need to:
        - Check the cost of a plan file under a given prior
        - Compare a plan against the standard Grover search
        - Evaluate a plan optimized for one prior under another
        
        Args:
            plan: Path of the plan file written by optimize_schedule
            dist: Distribution string ("uniform", "power:<n>", "exp:<c>",
                "hnorm:<c>", "custom:<path>")
            size: Search-set size N
            permute_seed: Optional seed of a random permutation
            
        Returns:
            Formatted report with E, E/sqrt(N), E/sqrt(sigma) and the
            improvement over (pi/4) sqrt(N)
        """
        try:
            schedule, _ = read_schedule(plan)
            prior = load_prior(dist, size, permute_seed)
            return _evaluate_schedule_impl(schedule, prior)
        except (ScheduleError, PriorError) as e:
            return f"Error: {str(e)}"
        except OSError as e:
            return f"Error reading plan: {str(e)}"
