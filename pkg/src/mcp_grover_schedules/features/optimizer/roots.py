"""
Root finder for the per-index angle equation.

For fixed multiplier lambda and weight pS = p_i S_i the optimal angle
solves

    g(theta) = (pS / 2) sin(2 theta) - lambda theta = 0.

(pS/2) sin(2 theta) is strictly concave on (0, pi/2) with slope pS at the
origin, and g(pi/2) < 0, so an interior root exists exactly when
pS > lambda and is unique. Dividing by pS leaves a one-parameter family
in r = lambda / pS, which is solved for whole vectors at once by Newton
iteration with a bisection fallback inside the shrinking bracket.
Starting from the previous sweep's angles usually takes one or two steps.
"""
import math
from typing import Optional

import numpy as np

from mcp_grover_schedules.features.optimizer.common import RootFindingError

HALF_PI = math.pi / 2
# pS must exceed lambda by this relative margin to get a non-zero angle
TIE_MARGIN = 1e-15


def solve_thetas(pS: np.ndarray, lam: float, tol: float = 1e-12,
                 max_steps: int = 60,
                 guess: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Solve the angle equation for a vector of weights.
    
    Args:
        pS: Non-negative weights p_i S_i
        lam: Positive multiplier
        tol: Convergence tolerance on theta
        max_steps: Maximum Newton/bisection steps
        guess: Optional starting angles, e.g. the previous sweep's; entries
            outside (0, pi/2) start from the bracket midpoint
        
    Returns:
        Angles in [0, pi/2); zero where pS <= lambda
        
    Raises:
        RootFindingError: If some root does not converge within max_steps
    """
    pS = np.asarray(pS, dtype=np.float64)
    if not lam > 0:
        raise RootFindingError(f"multiplier must be positive, got {lam}")
    theta = np.zeros(pS.shape)
    active = pS > lam * (1.0 + TIE_MARGIN)
    if not np.any(active):
        return theta

    r = lam / pS[active]
    lo = np.zeros(r.shape)
    hi = np.full(r.shape, HALF_PI)
    x = np.full(r.shape, 0.5 * HALF_PI)
    if guess is not None:
        start = np.asarray(guess, dtype=np.float64)[active]
        usable = (start > 0) & (start < HALF_PI)
        x = np.where(usable, start, x)

    roots = np.empty(r.shape)
    # Indices still iterating; converged ones drop out
    pending = np.arange(r.size)
    for _ in range(max_steps):
        g = 0.5 * np.sin(2.0 * x) - r * x
        # g > 0 strictly left of the root, g < 0 right of it
        positive = g > 0
        lo = np.where(positive, x, lo)
        hi = np.where(positive, hi, x)
        slope = np.cos(2.0 * x) - r
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = x - g / slope
        inside = np.isfinite(newton) & (newton >= lo) & (newton <= hi)
        step = np.where(inside, newton, 0.5 * (lo + hi))
        converged = inside & (np.abs(newton - x) <= tol)
        converged |= (hi - lo) <= tol
        exact = g == 0
        step = np.where(exact, x, step)
        converged |= exact
        roots[pending[converged]] = step[converged]
        keep = ~converged
        if not np.any(keep):
            break
        pending = pending[keep]
        r, lo, hi, x = r[keep], lo[keep], hi[keep], step[keep]
    else:
        raise RootFindingError(
            f"angle root finder did not converge for {pending.size} indices "
            f"within {max_steps} steps")
    theta[active] = roots
    return theta


def solve_theta(pS: float, lam: float, tol: float = 1e-12,
                max_steps: int = 60) -> float:
    """Scalar form of solve_thetas."""
    if pS < 0:
        raise RootFindingError(f"weight must be non-negative, got {pS}")
    return float(solve_thetas(np.array([pS]), lam, tol, max_steps)[0])
