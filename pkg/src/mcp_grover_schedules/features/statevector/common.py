"""
Common types for the state-vector feature.
"""
from dataclasses import dataclass

import numpy as np

from mcp_grover_schedules.utils.errors import GroverScheduleError

NORM_TOLERANCE = 1e-12


class StatevectorError(GroverScheduleError):
    """Exception raised for invalid amplitude vectors or indices."""
    pass


@dataclass(frozen=True, eq=False)
class AmplitudeVector:
    """Real amplitudes of a normalized N-dimensional state."""
    a: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=np.float64).ravel()
        if a.size < 1:
            raise StatevectorError("amplitude vector must not be empty")
        if not np.all(np.isfinite(a)):
            raise StatevectorError("amplitudes must be finite")
        norm = float(np.sum(a * a))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise StatevectorError(
                f"amplitudes must be normalized, sum of squares is {norm!r}")
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @property
    def N(self) -> int:
        return int(self.a.size)

    def check_index(self, s: int) -> None:
        if not 0 <= s < self.N:
            raise StatevectorError(
                f"index {s} out of range 0..{self.N - 1}")
