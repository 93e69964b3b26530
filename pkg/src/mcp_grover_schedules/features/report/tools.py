"""
Report tools.

This module provides MCP tools that rebuild the reference table of
optimized costs and the fit of E against sqrt(sigma).
"""
import logging
from typing import Optional

from mcp_grover_schedules.features.optimizer.common import (
    OptimizerConfig,
    OptimizerError,
)
from mcp_grover_schedules.features.prior.common import PriorError
from mcp_grover_schedules.features.prior.distributions import table1_specs
from mcp_grover_schedules.features.report.common import ReportError
from mcp_grover_schedules.features.report.fit import fit_linear, format_fit
from mcp_grover_schedules.features.report.table import (
    build_table,
    format_table,
    write_table,
)
from mcp_grover_schedules.utils.config import get_settings
from mcp_grover_schedules.utils.errors import ConfigError

logger = logging.getLogger(__name__)


def _reproduce_table_impl(
    size: int,
    config: OptimizerConfig,
    permute_seed: Optional[int] = None,
    out: Optional[str] = None,
) -> str:
    """
    Implementation of table reproduction.
    
    Args:
        size: Search-set size N
        config: Optimizer settings shared by all rows
        permute_seed: When given, each row is followed by its permuted form
        out: Optional path of the table file
            
    Returns:
        Table text followed by the fit
    """
    try:
        rows = build_table(table1_specs(size), config, permute_seed)
        if out:
            write_table(rows, out)
        text = format_table(rows) + "\n" + format_fit(fit_linear(rows), rows)
        failed = [row.label for row in rows if not row.converged]
        if failed:
            text += f"\nNot converged: {', '.join(failed)}"
        return text
    except Exception as e:
        logger.error("Table reproduction failed: %s", e)
        return f"Error reproducing table: {str(e)}"


def register_tools(mcp) -> None:
    """
    Register report tools with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    
    @mcp.tool()
    def reproduce_table(
        size: int = 1000000,
        steps: Optional[int] = None,
        tol: Optional[float] = None,
        permute_seed: Optional[int] = None,
        out: Optional[str] = None,
    ) -> str:
        """
        Optimizes the schedule for each reference distribution and
        tabulates E/sqrt(N), E/sqrt(sigma) and the improvement.
        
        Use this tool when you need to:
        - Reproduce the reference table for a search-set size
        - Check that E/sqrt(sigma) stays roughly constant across priors
        - Compare ordered and randomly permuted priors
        
        IMPORTANT: At N = 10^6 this runs eight full optimizations and can
        take several minutes. Use a smaller size for a quick look.
        
        Args:
            size: Search-set size N
            steps: Number of steps including the final Grover step
            tol: Convergence tolerance on the expected cost
            permute_seed: Optional seed; adds a permuted row per prior
            out: Optional path of the table file to write
            
        Returns:
            Tab-separated table, then the fitted coefficient of
            E = k sqrt(sigma) with per-row residuals
        """
        try:
            config = OptimizerConfig.from_settings(
                get_settings(), n=steps, tol_e=tol)
            return _reproduce_table_impl(size, config, permute_seed, out)
        except (OptimizerError, PriorError, ReportError, ConfigError) as e:
            return f"Error: {str(e)}"
