"""
Multiplier sweep for the optimal schedule.

Each optimized step l carries one Lagrange multiplier lambda_l for its
normalization constraint sum_i theta_i^2 = 4 m_l^2. A sweep step updates
step l in three stages, each enforcing one optimality condition:

1. angle equation:  p_i sin(theta) cos(theta) S_i = lambda_l theta, solved
   per index by the root finder;
2. constraint:      m_l = sqrt(sum_i theta_i^2) / 2;
3. multiplier:      lambda_l = (sum_i p_i prod_{k<l} cos^2 theta_i^(k))
                    / (8 m_l).

Sweeping l = 1..n-1 repeatedly is a fixed-point iteration; it stops once
the expected cost changes by less than the tolerance between sweeps. A
full sweep shares its survival products between steps and costs O(nN).
"""
import logging
import math
from dataclasses import replace
from typing import Optional, Tuple

import numpy as np

from mcp_grover_schedules.features.optimizer.common import (
    OptimizerConfig,
    OptimizerError,
    OptimizerState,
    Residuals,
)
from mcp_grover_schedules.features.optimizer.roots import solve_thetas
from mcp_grover_schedules.features.prior.common import Prior
from mcp_grover_schedules.features.schedule.common import (
    Schedule,
    idle_schedule,
)
from mcp_grover_schedules.features.schedule.cost import expected_cost

logger = logging.getLogger(__name__)

MAX_LAMBDA_HALVINGS = 64
# Largest single probability for which small angles can be assumed
SMALL_ANGLE_LIMIT = 0.1


def _failure_row(theta: np.ndarray) -> np.ndarray:
    return np.cos(theta) ** 2


def reach_probability(schedule: Schedule, step: int) -> np.ndarray:
    """Probability per index that steps 1..step-1 all fail."""
    schedule.check_step(step)
    reach = np.ones(schedule.N)
    for k in range(step - 1):
        reach *= _failure_row(schedule.theta[k])
    return reach


def downstream_weights(schedule: Schedule, step: int) -> np.ndarray:
    """
    Cost weight of the later steps as seen from one step.
    
    S_i = sum_{j>l} m_j prod_{k<j, k!=l} cos^2 theta_i^(k), including the
    final Grover step.
    
    Args:
        schedule: Current schedule
        step: Step l, 1..n-1
        
    Returns:
        Length-N vector of S_i >= 0
    """
    schedule.check_step(step)
    tail = np.full(schedule.N, schedule.m_final)
    for j in range(schedule.n - 1, step, -1):
        tail = schedule.m[j - 1] + _failure_row(schedule.theta[j - 1]) * tail
    return reach_probability(schedule, step) * tail


def downstream_weight(schedule: Schedule, step: int, index: int) -> float:
    """S_i of a single index; see downstream_weights."""
    if not 0 <= index < schedule.N:
        raise OptimizerError(f"index {index} out of range 0..{schedule.N - 1}")
    return float(downstream_weights(schedule, step)[index])


def initial_state(prior: Prior, config: OptimizerConfig) -> OptimizerState:
    """State with idle optimized steps and the initial multipliers."""
    schedule = idle_schedule(prior.N, config.n)
    lambdas = np.full(config.n - 1, config.initial_lambda(prior.N))
    return OptimizerState(lambdas=lambdas, schedule=schedule,
                          E=schedule.m_final)


def _check_sizes(schedule: Schedule, prior: Prior) -> None:
    if prior.N != schedule.N:
        raise OptimizerError(
            f"prior has N={prior.N} but schedule has N={schedule.N}")


def _solve_step(weights: np.ndarray, mass: float, lam: float,
                guess: np.ndarray, step: int,
                config: OptimizerConfig) -> Tuple[np.ndarray, float, float]:
    """Angles, iterations and next multiplier of one step."""
    if not mass > 0:
        raise OptimizerError(f"no probability mass reaches step {step}")
    for _ in range(MAX_LAMBDA_HALVINGS + 1):
        theta = solve_thetas(weights, lam, config.newton_tol,
                             config.newton_max_steps, guess)
        m = 0.5 * math.sqrt(float(np.sum(theta * theta)))
        if m > 0:
            return theta, m, mass / (8.0 * m)
        logger.warning("Step %d collapsed at lambda=%g; halving",
                       step, lam)
        lam *= 0.5
    raise OptimizerError(
        f"step {step} has no non-zero angle after "
        f"{MAX_LAMBDA_HALVINGS} multiplier halvings")


def sweep_step(state: OptimizerState, prior: Prior, step: int,
               config: Optional[OptimizerConfig] = None) -> OptimizerState:
    """
    Update the angles, iterations and multiplier of one step.
    
    If every angle collapses to zero the multiplier is halved and the
    step retried, up to MAX_LAMBDA_HALVINGS times.
    
    Args:
        state: Current optimizer state
        prior: Prior over the search set
        step: Step l to update, 1..n-1
        config: Root-finder settings; defaults when omitted
        
    Returns:
        New state with updated schedule, multiplier and E
        
    Raises:
        OptimizerError: If the step stays collapsed or no probability
            mass reaches it
    """
    schedule = state.schedule
    schedule.check_step(step)
    _check_sizes(schedule, prior)
    config = config or OptimizerConfig(n=schedule.n)

    reach = reach_probability(schedule, step)
    weights = prior.p * downstream_weights(schedule, step)
    mass = float(np.sum(prior.p * reach))
    theta, m, lam = _solve_step(weights, mass,
                                float(state.lambdas[step - 1]),
                                schedule.theta[step - 1], step, config)

    new_m = schedule.m.copy()
    new_m[step - 1] = m
    new_theta = schedule.theta.copy()
    new_theta[step - 1] = theta
    new_theta.setflags(write=False)
    new_schedule = Schedule(schedule.N, new_m, new_theta)
    lambdas = state.lambdas.copy()
    lambdas[step - 1] = lam
    return replace(state, lambdas=lambdas, schedule=new_schedule,
                   E=expected_cost(new_schedule, prior).E)


def sweep(state: OptimizerState, prior: Prior,
          config: Optional[OptimizerConfig] = None) -> OptimizerState:
    """
    Update steps 1..n-1 in order, as successive sweep_step calls would.
    
    The tails of the downstream weights only involve later steps, which
    are still unchanged when a step is updated, so they are built once per
    sweep. The reach products are carried forward as each step changes
    and E is evaluated once at the end.
    
    Args:
        state: Current optimizer state
        prior: Prior over the search set
        config: Root-finder settings; defaults when omitted
        
    Returns:
        New state after one full sweep
        
    Raises:
        OptimizerError: If a step stays collapsed or no probability mass
            reaches it
    """
    schedule = state.schedule
    _check_sizes(schedule, prior)
    config = config or OptimizerConfig(n=schedule.n)
    steps = schedule.n - 1
    if steps == 0:
        return state

    theta = np.array(schedule.theta)
    m = schedule.m.copy()
    lambdas = state.lambdas.copy()

    tails = np.empty_like(theta)
    tail = np.full(schedule.N, schedule.m_final)
    for j in range(steps - 1, -1, -1):
        tails[j] = tail
        tail = m[j] + _failure_row(theta[j]) * tail

    reach = np.ones(schedule.N)
    for j in range(steps):
        weights = prior.p * (reach * tails[j])
        mass = float(np.sum(prior.p * reach))
        theta[j], m[j], lambdas[j] = _solve_step(
            weights, mass, float(lambdas[j]), theta[j], j + 1, config)
        reach *= _failure_row(theta[j])

    new_schedule = Schedule(schedule.N, m, theta)
    return replace(state, lambdas=lambdas, schedule=new_schedule,
                   E=expected_cost(new_schedule, prior).E)


def optimality_residuals(state: OptimizerState, prior: Prior) -> Residuals:
    """
    Relative violations of the three optimality conditions per step.
    
    Args:
        state: State to check
        prior: Prior the state was optimized for
        
    Returns:
        Residuals with one entry per optimized step
    """
    schedule = state.schedule
    steps = schedule.n - 1
    multiplier = np.zeros(steps)
    constraint = np.zeros(steps)
    angle = np.zeros(steps)
    for step in range(1, steps + 1):
        theta = schedule.theta[step - 1]
        m = schedule.m[step - 1]
        lam = state.lambdas[step - 1]
        mass = np.sum(prior.p * reach_probability(schedule, step))
        if mass > 0:
            multiplier[step - 1] = abs(mass - 8 * lam * m) / mass
        squares = np.sum(theta * theta)
        if squares > 0:
            constraint[step - 1] = abs(squares - 4 * m * m) / squares
        active = theta > 0
        if np.any(active):
            weights = prior.p * downstream_weights(schedule, step)
            t = theta[active]
            lhs = weights[active] * np.sin(t) * np.cos(t)
            rhs = lam * t
            angle[step - 1] = float(np.max(np.abs(lhs - rhs) / rhs))
    return Residuals(multiplier=multiplier, constraint=constraint,
                     angle=angle)


def optimize(prior: Prior,
             config: Optional[OptimizerConfig] = None) -> OptimizerState:
    """
    Find the schedule minimizing the expected iteration count.
    
    Sweeps steps 1..n-1 until E changes by less than ``config.tol_e``
    between sweeps or the iteration limit is hit. On non-convergence the
    lowest-cost state seen is returned with ``converged=False``.
    
    Args:
        prior: Prior over the search set
        config: Optimizer settings; defaults when omitted
        
    Returns:
        Final OptimizerState with residuals and E history
    """
    config = config or OptimizerConfig()
    notes = []
    if float(np.max(prior.p)) > SMALL_ANGLE_LIMIT:
        note = (f"largest probability {float(np.max(prior.p)):.3g} exceeds "
                f"{SMALL_ANGLE_LIMIT}; the small-angle constraint is "
                f"unreliable for this prior")
        logger.warning(note)
        notes.append(note)

    state = initial_state(prior, config)
    if config.n == 1:
        return replace(state, delta_e=0.0, converged=True,
                       residuals=optimality_residuals(state, prior),
                       warnings=tuple(notes))

    history = []
    best = state
    converged = False
    delta = math.inf
    iteration = 0
    previous = state.E
    for iteration in range(1, config.max_outer_iterations + 1):
        state = sweep(state, prior, config)
        delta = abs(state.E - previous)
        previous = state.E
        history.append(state.E)
        if state.E <= best.E:
            best = state
        logger.debug("Sweep %d: E=%.12g dE=%.3g", iteration, state.E, delta)
        if iteration > 1 and delta < config.tol_e:
            converged = True
            break

    if converged:
        logger.info("Converged after %d sweeps, E=%.12g", iteration, state.E)
        final = state
    else:
        note = (f"no convergence within {config.max_outer_iterations} "
                f"sweeps (last dE={delta:.3g})")
        logger.warning(note)
        notes.append(note)
        final = best

    if final.E > final.schedule.m_final:
        note = "optimized cost exceeds the standard Grover search"
        logger.warning(note)
        notes.append(note)

    return replace(final, delta_e=delta, iterations=iteration,
                   converged=converged,
                   residuals=optimality_residuals(final, prior),
                   history=tuple(history), warnings=tuple(notes))
