"""
State-vector tools.

This module provides MCP tools that check the rotation picture of Grover
search on explicit amplitude vectors.
"""
from typing import List, Optional

from mcp_grover_schedules.features.statevector.common import StatevectorError
from mcp_grover_schedules.features.statevector.evolution import (
    check_against_closed_form,
)
from mcp_grover_schedules.features.statevector.formatting import (
    format_check,
    max_error,
)


def _check_statevector_impl(N: int, s: int, cs: float,
                            iterations: List[int]) -> str:
    """
    Implementation of the state-vector check.
    
    Args:
        N: Dimension
        s: Solution index
        cs: Initial amplitude at s
        iterations: Iteration counts to compare
            
    Returns:
        Comparison table followed by the largest absolute error
    """
    try:
        rows = check_against_closed_form(N, s, cs, iterations)
        return format_check(rows) + f"maxError\t{max_error(rows)!r}"
    except StatevectorError as e:
        return f"Error: {str(e)}"
    except Exception as e:
        return f"Error checking state vector: {str(e)}"


def register_tools(mcp) -> None:
    """
    Register state-vector tools with the MCP server.
    
    Args:
        mcp: The FastMCP server instance
    """
    
    @mcp.tool()
    def check_statevector(
        size: int,
        cs: float,
        iterations: Optional[List[int]] = None,
        solution: int = 0,
    ) -> str:
        """
        Runs Grover iterations on an explicit state and compares the
        success probability with sin^2((2m+1) arcsin(cs)).
        
        Use this tool when you need to:
        - Verify the rotation formula for a non-uniform initial state
        - Inspect how the success probability oscillates with m
        
        Args:
            size: Dimension N
            cs: Initial amplitude of the solution, in (0, 1)
            iterations: Iteration counts to check (default 0..10)
            solution: Solution index
            
        Returns:
            Table of m, simulated and closed-form probabilities
        """
        if iterations is None:
            iterations = list(range(11))
        return _check_statevector_impl(size, solution, cs, iterations)
