"""
Reference table of optimized costs.

Each row optimizes the schedule for one distribution and reports E/sqrt(N),
E/sqrt(sigma) and the improvement over the standard Grover search.
Tables are written as tab-separated text with a fixed header; floats use
repr() so regenerated files are byte-identical.
"""
import logging
import math
from pathlib import Path
from typing import Iterable, List, Optional, Union

from mcp_grover_schedules.features.optimizer.common import OptimizerConfig
from mcp_grover_schedules.features.optimizer.sweep import optimize
from mcp_grover_schedules.features.prior.common import DistributionSpec
from mcp_grover_schedules.features.prior.distributions import (
    discretize,
    sorted_stddev,
)
from mcp_grover_schedules.features.report.common import (
    ReportError,
    TableRow,
)
from mcp_grover_schedules.features.schedule.common import improvement

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
TABLE_HEADER = ("label", "N", "E", "E/sqrtN", "sigma", "E/sqrtSigma",
                "improvement", "converged")


def make_row(label: str, N: int, E: float, sigma: float,
             converged: bool) -> TableRow:
    """
    Build a row with its derived columns.
    
    A point-mass prior has sigma = 0; its row is kept with E/sqrt(sigma)
    set to NaN.
    """
    if not E > 0:
        raise ReportError(f"E must be positive for row {label}")
    if not (math.isfinite(sigma) and sigma >= 0):
        raise ReportError(
            f"sigma must be finite and non-negative for row {label}")
    if sigma > 0:
        ratio = E / math.sqrt(sigma)
    else:
        logger.warning("Row %s has sigma = 0; E/sqrt(sigma) is undefined",
                       label)
        ratio = math.nan
    return TableRow(
        label=label,
        N=N,
        E=E,
        sigma=sigma,
        e_over_sqrt_n=E / math.sqrt(N),
        e_over_sqrt_sigma=ratio,
        improvement_percent=improvement(E, N),
        converged=converged,
    )


def build_row(spec: DistributionSpec,
              config: Optional[OptimizerConfig] = None) -> TableRow:
    """Optimize one distribution and summarize it as a row."""
    config = config or OptimizerConfig()
    prior = discretize(spec)
    state = optimize(prior, config)
    if not state.converged:
        logger.warning("Row %s did not converge", prior.label)
    return make_row(prior.label, prior.N, state.E, sorted_stddev(prior),
                    state.converged)


def build_table(specs: Iterable[DistributionSpec],
                config: Optional[OptimizerConfig] = None,
                permutation_seed: Optional[int] = None) -> List[TableRow]:
    """
    Optimize every spec and collect the rows in input order.
    
    Args:
        specs: Distribution specs, one row each
        config: Optimizer settings shared by all rows
        permutation_seed: When given, each spec is followed by a row for
            its randomly permuted version
            
    Returns:
        List of TableRow; non-converged rows are kept and flagged
        
    Raises:
        ReportError: If no specs are given
    """
    specs = list(specs)
    if not specs:
        raise ReportError("need at least one distribution")
    rows = []
    for spec in specs:
        rows.append(build_row(spec, config))
        if permutation_seed is not None:
            permuted = DistributionSpec(
                family=spec.family, N=spec.N, param=spec.param,
                values=spec.values, permutation_seed=permutation_seed)
            rows.append(build_row(permuted, config))
    return rows


def format_table(rows: Iterable[TableRow]) -> str:
    lines = ["\t".join(TABLE_HEADER)]
    for row in rows:
        lines.append("\t".join([
            row.label,
            str(row.N),
            repr(row.E),
            repr(row.e_over_sqrt_n),
            repr(row.sigma),
            repr(row.e_over_sqrt_sigma),
            repr(row.improvement_percent),
            "yes" if row.converged else "no",
        ]))
    return "\n".join(lines) + "\n"


def write_table(rows: Iterable[TableRow], path: PathLike) -> None:
    Path(path).write_text(format_table(rows), encoding="utf-8")


def parse_table(text: str) -> List[TableRow]:
    """
    Parse a table written by format_table.
    
    Derived columns are recomputed from label, N, E, sigma and the
    converged flag.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or tuple(lines[0].split("\t")) != TABLE_HEADER:
        raise ReportError("table file lacks the expected header")
    rows = []
    for line in lines[1:]:
        cells = line.split("\t")
        if len(cells) != len(TABLE_HEADER):
            raise ReportError(f"malformed table line: {line!r}")
        try:
            rows.append(make_row(cells[0], int(cells[1]), float(cells[2]),
                                 float(cells[4]), cells[7] == "yes"))
        except ValueError as e:
            raise ReportError(f"malformed table line {line!r}: {e}")
    return rows


def read_table(path: PathLike) -> List[TableRow]:
    return parse_table(Path(path).read_text(encoding="utf-8"))
