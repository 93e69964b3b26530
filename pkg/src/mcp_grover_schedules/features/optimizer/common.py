"""
Common types for the optimizer feature.

This module provides the optimizer configuration, the iteration state
and the errors raised by the root finder and the outer loop.
"""
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from mcp_grover_schedules.features.schedule.common import Schedule
from mcp_grover_schedules.utils.config import Settings
from mcp_grover_schedules.utils.errors import GroverScheduleError


class OptimizerError(GroverScheduleError):
    """Exception raised when the schedule optimization cannot proceed."""
    pass


class RootFindingError(OptimizerError):
    """Exception raised when the angle root finder fails to converge."""
    pass


@dataclass(frozen=True)
class OptimizerConfig:
    """
    Settings of the multiplier sweep.
    
    ``lambda_init`` of None selects the rule 1/(8 sqrt(N)).
    """
    n: int = 10
    tol_e: float = 1e-6
    max_outer_iterations: int = 10000
    newton_tol: float = 1e-12
    newton_max_steps: int = 60
    lambda_init: Optional[float] = None

    def __post_init__(self):
        if self.n < 1:
            raise OptimizerError(f"need at least one step, got n={self.n}")
        if not self.tol_e > 0:
            raise OptimizerError("tol_e must be positive")
        if not self.newton_tol > 0:
            raise OptimizerError("newton_tol must be positive")
        if self.max_outer_iterations < 1 or self.newton_max_steps < 1:
            raise OptimizerError("iteration limits must be positive")
        if self.lambda_init is not None and not (
                math.isfinite(self.lambda_init) and self.lambda_init > 0):
            raise OptimizerError("lambda_init must be positive")

    @classmethod
    def from_settings(cls, settings: Settings, **overrides) -> "OptimizerConfig":
        """Config with environment defaults, overridden by non-None args."""
        values = {
            "n": settings.steps,
            "tol_e": settings.tol,
            "max_outer_iterations": settings.max_outer,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def initial_lambda(self, N: int) -> float:
        if self.lambda_init is not None:
            return self.lambda_init
        return 1.0 / (8.0 * math.sqrt(N))


@dataclass(frozen=True)
class Residuals:
    """
    Per-step maximum relative violations of the optimality conditions.
    
    ``multiplier`` is the m-equation (survival mass = 8 lambda m),
    ``constraint`` is sum theta^2 = 4 m^2 and ``angle`` is the per-index
    angle equation, taken over indices with theta > 0.
    """
    multiplier: np.ndarray
    constraint: np.ndarray
    angle: np.ndarray

    def worst(self) -> float:
        values = [np.max(r) for r in (self.multiplier, self.constraint,
                                      self.angle) if r.size]
        return float(max(values)) if values else 0.0


@dataclass(frozen=True, eq=False)
class OptimizerState:
    """Multipliers, schedule and cost after a sweep."""
    lambdas: np.ndarray
    schedule: Schedule
    E: float
    delta_e: float = math.inf
    iterations: int = 0
    converged: bool = False
    residuals: Optional[Residuals] = None
    history: Tuple[float, ...] = ()
    warnings: Tuple[str, ...] = field(default_factory=tuple)
