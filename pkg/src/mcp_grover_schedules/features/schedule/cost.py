"""
Expected iteration cost of multi-step schedules.

For solution index i the expected cost is

    E_i = sum_{j=1}^{n} m_j prod_{k<j} cos^2 theta_i^(k)

with m_n the final Grover step, and E = sum_i p_i E_i. Survival products
are built by forward recurrence; reductions over indices use numpy's
pairwise summation so results are reproducible bit for bit.
"""
import numpy as np

from mcp_grover_schedules.features.prior.common import Prior
from mcp_grover_schedules.features.schedule.common import (
    CostBreakdown,
    Schedule,
    ScheduleError,
)


def success_probability(theta):
    """Probability that a step ending at angle theta finds the solution."""
    return np.sin(theta) ** 2


def coefficients_from_angles(schedule: Schedule, step: int) -> np.ndarray:
    """
    Initial-state coefficients of an optimized step.
    
    Inverts theta = (2m+1) arcsin(c) exactly.
    
    Args:
        schedule: Schedule to read
        step: Optimized step, 1..n-1
        
    Returns:
        Length-N vector of coefficients c_i >= 0
        
    Raises:
        ScheduleError: If the step is out of range
    """
    schedule.check_step(step)
    m = schedule.m[step - 1]
    return np.sin(schedule.theta[step - 1] / (2 * m + 1))


def coefficient_norms(schedule: Schedule) -> np.ndarray:
    """Sum of squared coefficients per step; 1 only under small angles."""
    return np.array([
        np.sum(coefficients_from_angles(schedule, step) ** 2)
        for step in range(1, schedule.n)
    ])


def survival_products(schedule: Schedule) -> np.ndarray:
    """
    Cumulative failure probabilities.
    
    Returns:
        (n, N) matrix whose row j is prod_{k<=j} cos^2 theta^(k); row 0
        is all ones
    """
    survival = np.empty((schedule.n, schedule.N))
    survival[0] = 1.0
    failure = np.cos(schedule.theta) ** 2
    for j in range(1, schedule.n):
        survival[j] = survival[j - 1] * failure[j - 1]
    return survival


def expected_cost(schedule: Schedule, prior: Prior) -> CostBreakdown:
    """
    Expected number of Grover iterations of a schedule under a prior.
    
    Args:
        schedule: Schedule to evaluate
        prior: Prior over the same N indices
        
    Returns:
        CostBreakdown with E, the per-index costs and the survival matrix
        
    Raises:
        ScheduleError: If the prior and schedule sizes differ
    """
    if prior.N != schedule.N:
        raise ScheduleError(
            f"prior has N={prior.N} but schedule has N={schedule.N}")
    survival = survival_products(schedule)
    per_index = np.zeros(schedule.N)
    for j in range(1, schedule.n):
        per_index += schedule.m[j - 1] * survival[j - 1]
    per_index += schedule.m_final * survival[-1]
    E = float(np.sum(prior.p * per_index))
    per_index.setflags(write=False)
    survival.setflags(write=False)
    return CostBreakdown(E=E, per_index=per_index, survival=survival)


def constraint_residual(schedule: Schedule, step: int) -> float:
    """
    Residual of the small-angle normalization constraint of a step.
    
    Returns:
        sum_i theta_i^2 - 4 m^2
        
    Raises:
        ScheduleError: If the step is out of range
    """
    schedule.check_step(step)
    theta = schedule.theta[step - 1]
    m = schedule.m[step - 1]
    return float(np.sum(theta * theta) - 4.0 * m * m)
