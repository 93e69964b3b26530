"""
Common types for the report feature.
"""
from dataclasses import dataclass
from typing import Tuple

from mcp_grover_schedules.utils.errors import GroverScheduleError


class ReportError(GroverScheduleError):
    """Exception raised for invalid report inputs or files."""
    pass


@dataclass(frozen=True)
class TableRow:
    """
    One distribution's optimized cost and its derived columns.
    
    ``sigma`` is the index standard deviation of the prior sorted in
    descending order.
    """
    label: str
    N: int
    E: float
    sigma: float
    e_over_sqrt_n: float
    e_over_sqrt_sigma: float
    improvement_percent: float
    converged: bool


@dataclass(frozen=True)
class FitResult:
    """Origin-constrained least-squares fit E = k sqrt(sigma)."""
    coefficient: float
    residuals: Tuple[float, ...]
    labels: Tuple[str, ...]
    point_count: int
    domain: str = "tested families"
