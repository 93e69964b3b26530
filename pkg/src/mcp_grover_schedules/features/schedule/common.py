"""
Common types for the schedule feature.

This module provides the Schedule and CostBreakdown types shared by the
cost evaluation, the optimizer and the Monte-Carlo simulator.
"""
import math
from dataclasses import dataclass

import numpy as np

from mcp_grover_schedules.utils.errors import GroverScheduleError

HALF_PI = math.pi / 2
# Rounding excursions past [0, pi/2] up to this size are clamped
ANGLE_SLACK = 1e-9


class ScheduleError(GroverScheduleError):
    """Exception raised for invalid schedules or mismatched inputs."""
    pass


def grover_baseline(N: int) -> float:
    """Iterations of the standard Grover search, (pi/4) sqrt(N)."""
    return math.pi / 4 * math.sqrt(N)


def improvement(E: float, N: int) -> float:
    """
    Percentage saved against the standard Grover search.
    
    Returns:
        100 (1 - E / ((pi/4) sqrt(N)))
    """
    if not E > 0:
        raise ScheduleError(f"expected cost must be positive, got {E}")
    return 100.0 * (1.0 - E / grover_baseline(N))


@dataclass(frozen=True, eq=False)
class Schedule:
    """
    Multi-step search schedule.
    
    Steps 1..n-1 are optimized: step j applies ``m[j-1]`` Grover
    iterations and ``theta[j-1, i]`` is the final angle if index i is the
    solution. Step n is the standard Grover search with ``m_final``
    iterations, which always succeeds.
    """
    N: int
    m: np.ndarray
    theta: np.ndarray

    def __post_init__(self):
        if self.N < 2:
            raise ScheduleError(f"search set needs N >= 2, got N={self.N}")
        m = np.array(self.m, dtype=np.float64).ravel()
        theta = np.asarray(self.theta, dtype=np.float64)
        if theta.flags.writeable:
            theta = theta.copy()
        if theta.size == 0:
            theta = theta.reshape(0, self.N)
        if theta.ndim != 2 or theta.shape != (m.size, self.N):
            raise ScheduleError(
                f"theta must have shape ({m.size}, {self.N}), "
                f"got {theta.shape}")
        if not (np.all(np.isfinite(m)) and np.all(m >= 0)):
            raise ScheduleError("iteration counts must be finite and >= 0")
        if not np.all(np.isfinite(theta)):
            raise ScheduleError("angles must be finite")
        if np.any(theta < -ANGLE_SLACK) or np.any(
                theta > HALF_PI + ANGLE_SLACK):
            raise ScheduleError("angles must lie in [0, pi/2]")
        if np.any(theta < 0.0) or np.any(theta > HALF_PI):
            theta = np.clip(theta, 0.0, HALF_PI)
        m.setflags(write=False)
        theta.setflags(write=False)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "theta", theta)

    @property
    def n(self) -> int:
        """Total number of steps, including the final Grover step."""
        return int(self.m.size) + 1

    @property
    def m_final(self) -> float:
        return grover_baseline(self.N)

    def check_step(self, step: int) -> None:
        if not 1 <= step <= self.n - 1:
            raise ScheduleError(
                f"step must be in 1..{self.n - 1}, got {step}")

    def permuted(self, order: np.ndarray) -> "Schedule":
        """Schedule with the index axis reordered as ``theta[:, order]``."""
        order = np.asarray(order)
        if order.shape != (self.N,):
            raise ScheduleError("permutation length must equal N")
        return Schedule(self.N, self.m, self.theta[:, order])


def idle_schedule(N: int, n: int) -> Schedule:
    """Schedule whose n-1 optimized steps do nothing (E = m_final)."""
    if n < 1:
        raise ScheduleError(f"need at least one step, got n={n}")
    return Schedule(N, np.zeros(n - 1), np.zeros((n - 1, N)))


def uniform_schedule(N: int, n: int, m: float) -> Schedule:
    """
    Schedule repeating the uniform-state search with m iterations.
    
    Every optimized step starts from the equal superposition, so each
    index ends at angle (2m+1) arcsin(1/sqrt(N)), capped at pi/2.
    """
    if n < 1:
        raise ScheduleError(f"need at least one step, got n={n}")
    angle = min((2 * m + 1) * math.asin(1 / math.sqrt(N)), HALF_PI)
    return Schedule(N, np.full(n - 1, float(m)),
                    np.full((n - 1, N), angle))


@dataclass(frozen=True, eq=False)
class CostBreakdown:
    """
    Expected iteration cost of a schedule under a prior.
    
    ``survival[j, i]`` is the probability that steps 1..j all fail when i
    is the solution; row 0 is all ones and row n-1 is the probability of
    reaching the final step.
    """
    E: float
    per_index: np.ndarray
    survival: np.ndarray
