"""
Common types for the Monte-Carlo feature.
"""
import math
from dataclasses import dataclass

from mcp_grover_schedules.utils.errors import GroverScheduleError

MODES = ("relaxed", "integer")


class SimulationError(GroverScheduleError):
    """Exception raised for invalid simulation requests."""
    pass


@dataclass(frozen=True)
class SimulationReport:
    """Empirical mean cost of a schedule next to its analytic value."""
    trials: int
    mean_iterations: float
    stderr: float
    analytic_e: float
    mode: str
    seed: int

    @property
    def z_score(self) -> float:
        """|mean - E| in units of the standard error."""
        gap = abs(self.mean_iterations - self.analytic_e)
        if self.stderr == 0:
            return 0.0 if gap == 0 else math.inf
        return gap / self.stderr
