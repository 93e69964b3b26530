"""
Exact Grover evolution on explicit amplitude vectors.

The oracle O = 1 - 2|s><s| flips one amplitude and the reflection
R = 1 - 2|psi><psi| is applied as one inner product plus a rank-one
update, so each Grover iteration G = R O costs O(N).
"""
import math
from typing import List, Sequence, Tuple

import numpy as np

from mcp_grover_schedules.features.statevector.common import (
    AmplitudeVector,
    StatevectorError,
)


def uniform_state(N: int) -> AmplitudeVector:
    """Equal superposition over N indices."""
    if N < 1:
        raise StatevectorError(f"need N >= 1, got N={N}")
    return AmplitudeVector(np.full(N, 1.0 / math.sqrt(N)))


def biased_state(N: int, s: int, cs: float) -> AmplitudeVector:
    """State with amplitude cs at index s and equal weight elsewhere."""
    if N < 2:
        raise StatevectorError(f"need N >= 2, got N={N}")
    if not 0 < cs < 1:
        raise StatevectorError(f"bias must lie in (0, 1), got {cs}")
    if not 0 <= s < N:
        raise StatevectorError(f"index {s} out of range 0..{N - 1}")
    a = np.full(N, math.sqrt((1.0 - cs * cs) / (N - 1)))
    a[s] = cs
    return AmplitudeVector(a)


def apply_oracle(v: AmplitudeVector, s: int) -> AmplitudeVector:
    """Flip the sign of amplitude s."""
    v.check_index(s)
    a = v.a.copy()
    a[s] = -a[s]
    return AmplitudeVector(a)


def apply_reflection(v: AmplitudeVector,
                     psi: AmplitudeVector) -> AmplitudeVector:
    """Reflect v about psi: v - 2 <psi|v> psi."""
    if v.N != psi.N:
        raise StatevectorError(
            f"dimension mismatch: {v.N} vs {psi.N}")
    overlap = float(np.sum(psi.a * v.a))
    return AmplitudeVector(v.a - 2.0 * overlap * psi.a)


def _evolve(psi: AmplitudeVector, s: int, m: int) -> np.ndarray:
    psi.check_index(s)
    if m < 0:
        raise StatevectorError(f"iteration count must be >= 0, got {m}")
    base = psi.a
    a = base.copy()
    for _ in range(m):
        a[s] = -a[s]
        a -= 2.0 * float(np.sum(base * a)) * base
    return a


def evolve(psi: AmplitudeVector, s: int, m: int) -> AmplitudeVector:
    """Apply m Grover iterations G = R O to psi."""
    return AmplitudeVector(_evolve(psi, s, m))


def grover_success_probability(psi: AmplitudeVector, s: int,
                               m: int) -> float:
    """
    Probability of measuring s after m Grover iterations from psi.
    
    Args:
        psi: Initial state with real positive amplitudes
        s: Solution index
        m: Number of iterations
        
    Returns:
        Squared amplitude at s of (R O)^m psi
    """
    a = _evolve(psi, s, m)
    return float(a[s] * a[s])


def closed_form_success_probability(cs: float, m: int) -> float:
    """sin^2((2m+1) arcsin(cs)), the rotation-picture prediction."""
    return math.sin((2 * m + 1) * math.asin(cs)) ** 2


def nonsolution_component(psi: AmplitudeVector, s: int, m: int) -> float:
    """
    Overlap of the evolved state with the non-solution state of psi.
    
    The non-solution state is psi with index s removed and renormalized;
    the rotation picture predicts cos((2m+1) arcsin(psi_s)). Each
    iteration of R O carries a global sign of -1 (R reflects about psi
    rather than its complement), which is removed here.
    """
    a = _evolve(psi, s, m)
    rest = psi.a.copy()
    rest[s] = 0.0
    norm = math.sqrt(float(np.sum(rest * rest)))
    if norm == 0:
        raise StatevectorError("psi has no non-solution component")
    sign = -1.0 if m % 2 else 1.0
    return sign * float(np.sum(rest * a)) / norm


def check_against_closed_form(N: int, s: int, cs: float,
                              iterations: Sequence[int]
                              ) -> List[Tuple[int, float, float]]:
    """
    Evolve a biased state and compare with the rotation picture.
    
    Returns:
        (m, simulated probability, closed-form probability) per m
    """
    psi = biased_state(N, s, cs)
    return [(m, grover_success_probability(psi, s, m),
             closed_form_success_probability(cs, m)) for m in iterations]
