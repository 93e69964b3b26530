"""
Monte-Carlo replay of a schedule.

Each trial draws a solution index from the prior (inverse CDF on a
cumulative table), then runs the optimized steps in order, paying each
step's iterations and succeeding with probability sin^2 of the step's
final angle for that index. A trial that survives every optimized step
pays for the final Grover step, which always succeeds.

In ``relaxed`` mode iteration counts are the real-valued m of the
schedule. In ``integer`` mode each step runs round(m) iterations (half to
even), so the angle becomes (2 round(m) + 1) arcsin(c_i) with c_i the
step's initial coefficient, and the final step runs ceil((pi/4) sqrt(N)).

Trials are processed in fixed-size blocks, each drawing from its own
Philox stream derived from (seed, block index); results do not depend on
how the blocks are scheduled.
"""
import logging
import math
from typing import Tuple

import numpy as np

from mcp_grover_schedules.features.montecarlo.common import (
    MODES,
    SimulationError,
    SimulationReport,
)
from mcp_grover_schedules.features.prior.common import Prior
from mcp_grover_schedules.features.schedule.common import Schedule
from mcp_grover_schedules.features.schedule.cost import (
    coefficients_from_angles,
    expected_cost,
    success_probability,
)

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1 << 16


def _check(schedule: Schedule, prior: Prior, trials: int, seed: int,
           mode: str) -> None:
    if prior.N != schedule.N:
        raise SimulationError(
            f"prior has N={prior.N} but schedule has N={schedule.N}")
    if trials < 1:
        raise SimulationError(f"need at least one trial, got {trials}")
    if not 0 <= seed < 2**64:
        raise SimulationError("seed must fit in 64 bits")
    if mode not in MODES:
        raise SimulationError(f"mode must be one of {MODES}, got {mode!r}")


def _step_plan(schedule: Schedule,
               mode: str) -> Tuple[np.ndarray, np.ndarray, float]:
    """Per-step costs, per-step success matrix and final-step cost."""
    if mode == "relaxed":
        costs = schedule.m.copy()
        success = success_probability(schedule.theta)
        return costs, success, schedule.m_final
    costs = np.rint(schedule.m)
    success = np.empty_like(schedule.theta)
    for step in range(1, schedule.n):
        c = coefficients_from_angles(schedule, step)
        angle = (2 * costs[step - 1] + 1) * np.arcsin(c)
        success[step - 1] = success_probability(angle)
    return costs, success, float(math.ceil(schedule.m_final))


def _block_rng(seed: int, block: int) -> np.random.Generator:
    sequence = np.random.SeedSequence(seed, spawn_key=(block,))
    return np.random.Generator(np.random.Philox(sequence))


def run_trials(schedule: Schedule, prior: Prior, trials: int, seed: int,
               mode: str = "relaxed") -> Tuple[np.ndarray, np.ndarray]:
    """
    Simulate trials of the search procedure.
    
    Args:
        schedule: Schedule to replay
        prior: Prior the solution index is drawn from
        trials: Number of trials
        seed: 64-bit seed
        mode: ``relaxed`` or ``integer``
        
    Returns:
        Tuple (cost per trial, step of success per trial, 1-based; n for
        the final Grover step)
        
    Raises:
        SimulationError: On mismatched sizes or invalid arguments
    """
    _check(schedule, prior, trials, seed, mode)
    costs, success, final_cost = _step_plan(schedule, mode)
    cdf = np.cumsum(prior.p)
    cdf[-1] = 1.0

    total = np.empty(trials)
    found_at = np.empty(trials, dtype=np.int64)
    for block, start in enumerate(range(0, trials, BLOCK_SIZE)):
        size = min(BLOCK_SIZE, trials - start)
        rng = _block_rng(seed, block)
        solution = np.searchsorted(cdf, rng.random(size), side="right")
        solution = np.minimum(solution, prior.N - 1)
        cost = np.zeros(size)
        step_found = np.full(size, schedule.n, dtype=np.int64)
        alive = np.ones(size, dtype=bool)
        for step in range(1, schedule.n):
            draws = rng.random(size)
            cost[alive] += costs[step - 1]
            hit = alive & (draws < success[step - 1, solution])
            step_found[hit] = step
            alive &= ~hit
        cost[alive] += final_cost
        total[start:start + size] = cost
        found_at[start:start + size] = step_found
    return total, found_at


def simulate(schedule: Schedule, prior: Prior, trials: int, seed: int,
             mode: str = "relaxed") -> SimulationReport:
    """
    Estimate the mean iteration count of a schedule by simulation.
    
    Args:
        schedule: Schedule to replay
        prior: Prior the solution index is drawn from
        trials: Number of trials
        seed: 64-bit seed
        mode: ``relaxed`` or ``integer``
        
    Returns:
        SimulationReport with mean, standard error and the analytic E
    """
    cost, _ = run_trials(schedule, prior, trials, seed, mode)
    mean = float(np.mean(cost))
    spread = float(np.std(cost, ddof=1)) if trials > 1 else 0.0
    report = SimulationReport(
        trials=trials,
        mean_iterations=mean,
        stderr=spread / math.sqrt(trials),
        analytic_e=expected_cost(schedule, prior).E,
        mode=mode,
        seed=seed,
    )
    logger.info("Simulated %d trials (%s): mean=%.6g E=%.6g z=%.3g",
                trials, mode, report.mean_iterations, report.analytic_e,
                report.z_score)
    return report


def success_step_histogram(schedule: Schedule, prior: Prior, trials: int,
                           seed: int, mode: str = "relaxed") -> np.ndarray:
    """
    Count the trials that succeed at each step.
    
    Returns:
        Length-n vector of counts summing to ``trials``; the last bin is
        the final Grover step
    """
    _, found_at = run_trials(schedule, prior, trials, seed, mode)
    return np.bincount(found_at - 1, minlength=schedule.n)


def analytic_step_masses(schedule: Schedule, prior: Prior) -> np.ndarray:
    """
    Probability that the search ends at each step.
    
    Step j (< n) ends the search with mass sum_i p_i (R_i^(j-1) - R_i^(j))
    where R is the survival matrix; the final step takes the rest.
    """
    survival = expected_cost(schedule, prior).survival
    masses = np.empty(schedule.n)
    for step in range(1, schedule.n):
        drop = survival[step - 1] - survival[step]
        masses[step - 1] = np.sum(prior.p * drop)
    masses[-1] = np.sum(prior.p * survival[-1])
    return masses
