"""
Common types for the prior feature.

This module provides the Prior and DistributionSpec types shared by the
discretization code, the serialization helpers and the tools.
"""
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from mcp_grover_schedules.utils.errors import GroverScheduleError

FAMILIES = ("uniform", "power", "exponential", "halfnormal", "custom")
# Vectors already summing to 1 within this are kept bit for bit
NORMALIZATION_TOL = 1e-12


class PriorError(GroverScheduleError):
    """Exception raised for invalid priors or distribution specs."""
    pass


@dataclass(frozen=True, eq=False)
class Prior:
    """
    Probability vector over the N indices of a search set.
    
    The constructor renormalizes ``p`` by its sum, so callers may pass
    unnormalized non-negative weights. A vector that already sums to 1
    within NORMALIZATION_TOL is stored unchanged, so reordering or
    reloading a prior keeps its exact values.
    """
    p: np.ndarray
    label: str = "custom"

    def __post_init__(self):
        p = np.array(self.p, dtype=np.float64).ravel()
        if p.size < 2:
            raise PriorError(f"search set needs N >= 2, got N={p.size}")
        if not np.all(np.isfinite(p)):
            raise PriorError("probabilities must be finite")
        if np.any(p < 0):
            raise PriorError("probabilities must be non-negative")
        total = np.sum(p)
        if not total > 0:
            raise PriorError("probabilities must not all be zero")
        if abs(total - 1.0) > NORMALIZATION_TOL:
            p = p / total
        p.setflags(write=False)
        object.__setattr__(self, "p", p)

    @property
    def N(self) -> int:
        return int(self.p.size)


@dataclass(frozen=True)
class DistributionSpec:
    """
    Source family of a prior and its parameters.
    
    ``param`` is the power exponent n for ``power`` and the rate c for
    ``exponential`` and ``halfnormal``; ``values`` holds the raw weights
    of a ``custom`` spec.
    """
    family: str
    N: int
    param: Optional[float] = None
    values: Optional[Tuple[float, ...]] = field(default=None, repr=False)
    permutation_seed: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PriorError(f"unknown distribution family: {self.family}")
        if self.family == "custom":
            if self.values is None:
                raise PriorError("custom distribution needs values")
            object.__setattr__(self, "N", len(self.values))
        if self.N < 2:
            raise PriorError(f"search set needs N >= 2, got N={self.N}")
        if self.family == "power":
            if (self.param is None or not math.isfinite(self.param)
                    or self.param < 0 or self.param != int(self.param)):
                raise PriorError(
                    "power exponent must be a non-negative integer")
        if self.family in ("exponential", "halfnormal"):
            if (self.param is None or not math.isfinite(self.param)
                    or self.param <= 0):
                raise PriorError(
                    f"{self.family} rate c must be positive and finite")
        if self.permutation_seed is not None and not (
                0 <= self.permutation_seed < 2**64):
            raise PriorError("permutation seed must fit in 64 bits")

    @property
    def label(self) -> str:
        """Short identifier used in reports and file headers."""
        if self.family == "uniform":
            base = "1"
        elif self.family == "power":
            n = int(self.param)
            base = {0: "1", 1: "2x"}.get(n, f"{n + 1}x^{n}")
        elif self.family == "exponential":
            base = f"exp:{self.param:g}"
        elif self.family == "halfnormal":
            base = f"hnorm:{self.param:g}"
        else:
            base = "custom"
        if self.permutation_seed is not None:
            base += f"@perm{self.permutation_seed}"
        return base
