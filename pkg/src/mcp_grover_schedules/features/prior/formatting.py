"""
Formatting utilities for priors.
"""
from mcp_grover_schedules.features.prior.common import Prior
from mcp_grover_schedules.features.prior.distributions import (
    index_stddev,
    sorted_stddev,
)


def format_prior_summary(prior: Prior) -> str:
    """
    Format the key statistics of a prior.
    
    Args:
        prior: Prior to describe
        
    Returns:
        Markdown summary with size, spread and largest probability
    """
    sigma = index_stddev(prior)
    ordered = sorted_stddev(prior)
    details = [f"# Prior: {prior.label}"]
    details.append(f"N: {prior.N}")
    details.append(f"sigma: {sigma:.6f}")
    details.append(f"sigma/N: {sigma / prior.N:.6f}")
    if abs(ordered - sigma) > 1e-9 * max(sigma, 1.0):
        details.append(f"sigma (sorted): {ordered:.6f}")
    details.append(f"max p: {float(prior.p.max()):.6g}")
    return "\n".join(details)
