"""
Optimizer tools.

This module provides MCP tools for computing optimal schedules.
"""
from typing import Optional

from mcp_grover_schedules.features.optimizer.common import (
    OptimizerConfig,
    OptimizerError,
)
from mcp_grover_schedules.features.optimizer.formatting import (
    format_run_report,
)
from mcp_grover_schedules.features.optimizer.sweep import optimize
from mcp_grover_schedules.features.prior.common import Prior, PriorError
from mcp_grover_schedules.features.prior.distributions import load_prior
from mcp_grover_schedules.features.schedule.io import write_schedule
from mcp_grover_schedules.utils.config import get_settings
from mcp_grover_schedules.utils.errors import ConfigError


def _optimize_schedule_impl(
    prior: Prior,
    config: OptimizerConfig,
    out: Optional[str] = None,
) -> str:
    """
    Implementation of schedule optimization.
    
    Args:
        prior: Prior to optimize for
        config: Optimizer settings
        out: Optional path of the plan file to write
            
    Returns:
        Formatted run report
    """
    try:
        state = optimize(prior, config)
        if out:
            write_schedule(state.schedule, out, state.lambdas)
        report = format_run_report(state, prior)
        if out:
            report += f"\n\nPlan written to: {out}"
        return report
    except Exception as e:
        return f"Error optimizing schedule: {str(e)}"


def register_tools(mcp) -> None:
    """
    Register optimizer tools with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    
    @mcp.tool()
    def optimize_schedule(
        dist: str,
        size: int,
        steps: Optional[int] = None,
        tol: Optional[float] = None,
        out: Optional[str] = None,
        permute_seed: Optional[int] = None,
        lambda_init: Optional[float] = None,
    ) -> str:
        """
        Finds the multi-step search schedule with the lowest expected
        number of Grover iterations for a prior.
        
        Use this tool when you need to:
        - Compute the optimal iterations per step for a known prior
        - Measure the saving over the standard Grover search
        - Produce a plan file for evaluation or simulation
        
        IMPORTANT: Large search sets (N around 10^6) take minutes.
        
        Args:
            dist: Distribution string ("uniform", "power:<n>", "exp:<c>",
                "hnorm:<c>", "custom:<path>")
            size: Search-set size N
            steps: Number of steps including the final Grover step
            tol: Convergence tolerance on the expected cost
            out: Optional path of the plan file to write
            permute_seed: Optional seed of a random permutation
            lambda_init: Optional initial Lagrange multiplier
            
        Returns:
            Formatted report with convergence status, E, E/sqrt(N),
            E/sqrt(sigma), improvement, per-step (m, lambda) and residuals
        """
        try:
            config = OptimizerConfig.from_settings(
                get_settings(), n=steps, tol_e=tol, lambda_init=lambda_init)
            prior = load_prior(dist, size, permute_seed)
            return _optimize_schedule_impl(prior, config, out)
        except (OptimizerError, PriorError, ConfigError) as e:
            return f"Error: {str(e)}"
