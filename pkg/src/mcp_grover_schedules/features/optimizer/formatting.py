"""
Formatting utilities for optimizer runs.
"""
import math

from mcp_grover_schedules.features.optimizer.common import OptimizerState
from mcp_grover_schedules.features.prior.common import Prior
from mcp_grover_schedules.features.prior.distributions import sorted_stddev
from mcp_grover_schedules.features.schedule.common import improvement


def format_run_report(state: OptimizerState, prior: Prior) -> str:
    """
    Format the outcome of an optimization.
    
    Args:
        state: Final optimizer state
        prior: Prior that was optimized for
        
    Returns:
        Markdown report with convergence, cost, per-step parameters and
        residuals
    """
    schedule = state.schedule
    sigma = sorted_stddev(prior)
    details = [f"# Optimized schedule: {prior.label}"]
    details.append(f"Converged: {'yes' if state.converged else 'no'}")
    details.append(f"Outer iterations: {state.iterations}")
    details.append(f"E: {state.E:.10g}")
    details.append(f"E/sqrtN: {state.E / math.sqrt(schedule.N):.6f}")
    if sigma > 0:
        details.append(f"E/sqrtSigma: {state.E / math.sqrt(sigma):.6f}")
    details.append(
        f"Improvement: {improvement(state.E, schedule.N):.2f} %")

    if schedule.n > 1:
        details.append("\n## Steps")
        for j in range(schedule.n - 1):
            details.append(f"- step {j + 1}: m={schedule.m[j]:.6f} "
                           f"lambda={state.lambdas[j]:.6g}")
    if state.residuals is not None:
        residuals = state.residuals
        details.append("\n## Max relative residuals")
        for name in ("multiplier", "constraint", "angle"):
            values = getattr(residuals, name)
            worst = float(values.max()) if values.size else 0.0
            details.append(f"- {name}: {worst:.3g}")
    if state.warnings:
        details.append("\n## Warnings")
        details.extend(f"- {note}" for note in state.warnings)
    return "\n".join(details)
