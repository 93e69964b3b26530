from mcp.server.fastmcp import FastMCP


def register_prompt(mcp: FastMCP) -> None:
    
    @mcp.prompt(name="Reproduce Prior Search Table",
                description="Rebuild the optimized-cost table and its fit")
    def reproduce_prior_search_table(size: str = "1000000") -> str:
        """
        Walk through rebuilding the optimized-cost table.
        
        Use this prompt when you need to:
        - Reproduce the reference table for a search-set size
        - Check the E = k sqrt(sigma) law on the reference priors
        - Cross-check one optimized plan by simulation
        
        Returns:
            Instructions for the table workflow
        """
        return f"""Rebuild the table of optimized multi-step search costs
for a search set of N = {size} elements.

Using the available tools, please:

1. Describe each reference prior at N = {size} (describe_prior) for
   "uniform", "power:1", "power:2", "power:3", "power:4", "power:5",
   "exp:30" and "hnorm:18", and note sigma for each.
2. Run reproduce_table with size={size}. If the size is 10^6, warn that
   this takes minutes and offer a smaller size first.
3. For one non-uniform prior, run optimize_schedule with an output plan
   file, then simulate_schedule on that plan with at least 100000 trials
   and report the z-score between simulation and the analytic cost.
4. Optionally run check_statevector for a small N to confirm that the
   success probability follows sin^2((2m+1) arcsin(cs)).

Summarize as a short markdown report with:

1. **Table**: label, E/sqrt(N), E/sqrt(sigma), improvement, converged
2. **Fit**: the coefficient k and the largest residual
3. **Cross-check**: simulated mean, analytic E and z-score

Flag any row that did not converge."""
