"""
Formatting utilities for state-vector checks.
"""
from typing import Sequence, Tuple

CHECK_HEADER = ("m", "simulated", "closedForm", "absError")


def format_check(rows: Sequence[Tuple[int, float, float]]) -> str:
    """Tab-separated table of simulated against predicted probability."""
    lines = ["\t".join(CHECK_HEADER)]
    for m, simulated, predicted in rows:
        lines.append("\t".join([str(m), repr(simulated), repr(predicted),
                                repr(abs(simulated - predicted))]))
    return "\n".join(lines) + "\n"


def max_error(rows: Sequence[Tuple[int, float, float]]) -> float:
    return max((abs(sim - pred) for _, sim, pred in rows), default=0.0)
