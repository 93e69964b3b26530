"""
Monte-Carlo tools.

This module provides MCP tools for simulating saved schedules.
"""
from typing import Optional

from mcp_grover_schedules.features.montecarlo.common import SimulationError
from mcp_grover_schedules.features.montecarlo.formatting import (
    format_simulation_report,
)
from mcp_grover_schedules.features.montecarlo.simulate import (
    simulate,
    success_step_histogram,
)
from mcp_grover_schedules.features.prior.common import Prior, PriorError
from mcp_grover_schedules.features.prior.distributions import load_prior
from mcp_grover_schedules.features.schedule.common import (
    Schedule,
    ScheduleError,
)
from mcp_grover_schedules.features.schedule.io import read_schedule


def _simulate_schedule_impl(
    schedule: Schedule,
    prior: Prior,
    trials: int,
    seed: int,
    mode: str = "relaxed",
) -> str:
    """
    Implementation of schedule simulation.
    
    Args:
        schedule: Schedule to replay
        prior: Prior the solutions are drawn from
        trials: Number of trials
        seed: Seed of the random streams
        mode: "relaxed" or "integer"
            
    Returns:
        Single-line simulation record
    """
    try:
        report = simulate(schedule, prior, trials, seed, mode)
        histogram = success_step_histogram(schedule, prior, trials, seed,
                                           mode)
        return format_simulation_report(report, histogram)
    except SimulationError as e:
        return f"Error: {str(e)}"
    except Exception as e:
        return f"Error simulating schedule: {str(e)}"


def register_tools(mcp) -> None:
    """
    Register Monte-Carlo tools with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    
    @mcp.tool()
    def simulate_schedule(
        plan: str,
        dist: str,
        size: int,
        trials: int = 100000,
        seed: int = 1,
        mode: str = "relaxed",
        permute_seed: Optional[int] = None,
    ) -> str:
        """
        Replays a saved schedule on random solutions drawn from a prior.
        
        Use this tool when you need to:
        - Check the analytic expected cost against simulation
        - See at which step searches typically succeed
        - Estimate the effect of rounding iterations to whole numbers
        
        Args:
            plan: Path of the plan file
            dist: Distribution string ("uniform", "power:<n>", "exp:<c>",
                "hnorm:<c>", "custom:<path>")
            size: Search-set size N
            trials: Number of simulated searches
            seed: Seed of the random streams
            mode: "relaxed" (real iteration counts) or "integer"
            permute_seed: Optional seed of a random permutation
            
        Returns:
            Record with mean iterations, standard error, analytic E,
            z-score and the per-step success histogram
        """
        try:
            schedule, _ = read_schedule(plan)
            prior = load_prior(dist, size, permute_seed)
            return _simulate_schedule_impl(schedule, prior, trials, seed,
                                           mode)
        except (ScheduleError, PriorError) as e:
            return f"Error: {str(e)}"
        except OSError as e:
            return f"Error reading plan: {str(e)}"
