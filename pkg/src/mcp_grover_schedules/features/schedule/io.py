"""
Text serialization of schedules ("plan" files).

Layout::

    n=<int> N=<int> mFinal=<real>
    step=<j> m=<real> lambda=<real>      (one line per optimized step)
    theta
    <theta row of step 1, N values>
    ...

All reals are written with repr() so they round-trip exactly. Lambda is
``nan`` when the schedule did not come from the optimizer.
"""
import math
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from mcp_grover_schedules.features.schedule.common import (
    Schedule,
    ScheduleError,
)

PathLike = Union[str, Path]
THETA_MARKER = "theta"


def format_schedule(schedule: Schedule,
                    lambdas: Optional[Sequence[float]] = None) -> str:
    """Render a schedule (and optional multipliers) as plan text."""
    steps = schedule.n - 1
    if lambdas is None:
        lambdas = [math.nan] * steps
    if len(lambdas) != steps:
        raise ScheduleError("need one multiplier per optimized step")
    lines = [f"n={schedule.n} N={schedule.N} mFinal={schedule.m_final!r}"]
    for j in range(steps):
        lines.append(f"step={j + 1} m={float(schedule.m[j])!r} "
                     f"lambda={float(lambdas[j])!r}")
    lines.append(THETA_MARKER)
    for row in schedule.theta:
        lines.append(" ".join(repr(value) for value in row.tolist()))
    return "\n".join(lines) + "\n"


def write_schedule(schedule: Schedule, path: PathLike,
                   lambdas: Optional[Sequence[float]] = None) -> None:
    Path(path).write_text(format_schedule(schedule, lambdas),
                          encoding="utf-8")


def _fields(line: str) -> dict:
    fields = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ScheduleError(f"malformed plan token {token!r}")
        fields[key] = value
    return fields


def parse_schedule(text: str) -> Tuple[Schedule, np.ndarray]:
    """
    Parse plan text.
    
    Returns:
        Tuple (schedule, lambdas)
        
    Raises:
        ScheduleError: If the text does not follow the plan layout
    """
    lines = text.splitlines()
    if not lines:
        raise ScheduleError("empty plan file")
    try:
        header = _fields(lines[0])
        n = int(header["n"])
        N = int(header["N"])
        steps = n - 1
        m = np.empty(steps)
        lambdas = np.empty(steps)
        for j in range(steps):
            fields = _fields(lines[1 + j])
            if int(fields["step"]) != j + 1:
                raise ScheduleError(f"expected step={j + 1}")
            m[j] = float(fields["m"])
            lambdas[j] = float(fields["lambda"])
        if lines[1 + steps].strip() != THETA_MARKER:
            raise ScheduleError("missing theta block")
        theta = np.zeros((steps, N))
        block = lines[2 + steps:2 + 2 * steps]
        if len(block) != steps:
            raise ScheduleError(f"theta block needs {steps} rows")
        for j, line in enumerate(block):
            row = [float(value) for value in line.split()]
            if len(row) != N:
                raise ScheduleError(f"theta rows must have N={N} values")
            theta[j] = row
    except (KeyError, IndexError, ValueError) as e:
        raise ScheduleError(f"malformed plan file: {e}")
    schedule = Schedule(N, m, theta)
    return schedule, lambdas


def read_schedule(path: PathLike) -> Tuple[Schedule, np.ndarray]:
    return parse_schedule(Path(path).read_text(encoding="utf-8"))
