"""
Linear law between optimized cost and index spread.

The fit has no intercept: E = k sqrt(sigma), with k minimizing
sum (E - k sqrt(sigma))^2, i.e. k = sum(E sqrt(sigma)) / sum(sigma).
"""
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np

from mcp_grover_schedules.features.report.common import (
    FitResult,
    ReportError,
    TableRow,
)

PathLike = Union[str, Path]
FIT_HEADER = ("label", "sqrtSigma", "E", "fitted", "residual")
PLOT_HEADER = ("label", "sqrtSigma", "E", "E/sqrtSigma")


def fit_linear(rows: Sequence[TableRow]) -> FitResult:
    """
    Fit E against sqrt(sigma) through the origin.
    
    Args:
        rows: Table rows, at least two
        
    Returns:
        FitResult with the slope and per-row residuals
        
    Raises:
        ReportError: With fewer than two rows, or when every row has
            sigma = 0
    """
    if len(rows) < 2:
        raise ReportError(f"need at least 2 rows to fit, got {len(rows)}")
    E = np.array([row.E for row in rows])
    sigma = np.array([row.sigma for row in rows])
    if not np.sum(sigma) > 0:
        raise ReportError("cannot fit rows that all have sigma = 0")
    coefficient = float(np.sum(E * np.sqrt(sigma)) / np.sum(sigma))
    residuals = E - coefficient * np.sqrt(sigma)
    return FitResult(
        coefficient=coefficient,
        residuals=tuple(float(r) for r in residuals),
        labels=tuple(row.label for row in rows),
        point_count=len(rows),
    )


def plot_points(rows: Sequence[TableRow]
                ) -> List[Tuple[str, float, float, float]]:
    """(label, sqrt(sigma), E, E/sqrt(sigma)) per row, for plotting."""
    return [(row.label, float(np.sqrt(row.sigma)), row.E,
             row.e_over_sqrt_sigma) for row in rows]


def format_fit(fit: FitResult, rows: Sequence[TableRow]) -> str:
    lines = [f"coefficient\t{fit.coefficient!r}",
             f"points\t{fit.point_count}",
             f"domain\t{fit.domain}",
             "\t".join(FIT_HEADER)]
    for row, residual in zip(rows, fit.residuals):
        root = float(np.sqrt(row.sigma))
        lines.append("\t".join([row.label, repr(root), repr(row.E),
                                repr(fit.coefficient * root),
                                repr(residual)]))
    return "\n".join(lines) + "\n"


def write_fit(fit: FitResult, rows: Sequence[TableRow],
              path: PathLike) -> None:
    Path(path).write_text(format_fit(fit, rows), encoding="utf-8")


def format_plot_data(rows: Sequence[TableRow]) -> str:
    lines = ["\t".join(PLOT_HEADER)]
    for label, root, E, ratio in plot_points(rows):
        lines.append("\t".join([label, repr(root), repr(E), repr(ratio)]))
    return "\n".join(lines) + "\n"


def write_plot_data(rows: Sequence[TableRow], path: PathLike) -> None:
    Path(path).write_text(format_plot_data(rows), encoding="utf-8")
