"""
Formatting utilities for schedule evaluations.
"""
import math

from mcp_grover_schedules.features.prior.common import Prior
from mcp_grover_schedules.features.prior.distributions import sorted_stddev
from mcp_grover_schedules.features.schedule.common import (
    CostBreakdown,
    Schedule,
    improvement,
)
from mcp_grover_schedules.features.schedule.cost import coefficient_norms


def format_cost_report(schedule: Schedule, prior: Prior,
                       cost: CostBreakdown) -> str:
    """
    Format the expected cost of a schedule.
    
    Args:
        schedule: Evaluated schedule
        prior: Prior used for the evaluation
        cost: Result of expected_cost
        
    Returns:
        Markdown report with E, its normalizations and the improvement
        over the standard Grover search
    """
    sigma = sorted_stddev(prior)
    details = [f"# Schedule cost: {prior.label}"]
    details.append(f"n: {schedule.n}")
    details.append(f"N: {schedule.N}")
    details.append(f"E: {cost.E:.10g}")
    details.append(f"E/sqrtN: {cost.E / math.sqrt(schedule.N):.6f}")
    if sigma > 0:
        details.append(f"E/sqrtSigma: {cost.E / math.sqrt(sigma):.6f}")
    details.append(
        f"Improvement: {improvement(cost.E, schedule.N):.2f} %")
    if schedule.n > 1:
        details.append("\n## Steps")
        norms = coefficient_norms(schedule)
        for j in range(schedule.n - 1):
            details.append(f"- step {j + 1}: m={schedule.m[j]:.6f} "
                           f"sum c^2={norms[j]:.6f}")
    return "\n".join(details)
