"""
Prior tools.

This module provides MCP tools for inspecting discretized priors.
"""
from typing import Optional

from mcp_grover_schedules.features.prior.common import Prior, PriorError
from mcp_grover_schedules.features.prior.distributions import load_prior
from mcp_grover_schedules.features.prior.formatting import (
    format_prior_summary,
)
from mcp_grover_schedules.features.prior.io import write_prior


def _describe_prior_impl(prior: Prior, out: Optional[str] = None) -> str:
    """
    Implementation of prior description.
    
    Args:
        prior: Discretized prior
        out: Optional path to write the prior file to
            
    Returns:
        Formatted string with the prior statistics
    """
    try:
        summary = format_prior_summary(prior)
        if out:
            write_prior(prior, out)
            summary += f"\nWritten to: {out}"
        return summary
    except Exception as e:
        return f"Error describing prior: {str(e)}"


def register_tools(mcp) -> None:
    """
    Register prior tools with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    
    @mcp.tool()
    def describe_prior(
        dist: str,
        size: int,
        permute_seed: Optional[int] = None,
        out: Optional[str] = None,
    ) -> str:
        """
        Discretizes a distribution over a search set and summarizes it.
        
        Use this tool when you need to:
        - Check the index standard deviation sigma of a prior
        - Compare a permuted prior with its ordered version
        - Save a prior file for later evaluation
        
        Args:
            dist: Distribution, one of "uniform", "power:<n>", "exp:<c>",
                "hnorm:<c>" or "custom:<path>"
            size: Search-set size N
            permute_seed: Optional seed of a random permutation
            out: Optional path to write the prior file to
            
        Returns:
            Formatted string with N, sigma, sigma/N and the largest
            probability
        """
        try:
            prior = load_prior(dist, size, permute_seed)
            return _describe_prior_impl(prior, out)
        except PriorError as e:
            return f"Error: {str(e)}"
