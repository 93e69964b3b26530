"""
Discretization, permutation and moments of priors.

A continuous density f on [0, 1] is turned into a prior over N indices by
integrating it over the bins [i/N, (i+1)/N]. All families use closed-form
antiderivatives so the bins stay accurate at N = 10^6.
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.special import erf, erfc

from mcp_grover_schedules.features.prior.common import (
    DistributionSpec,
    Prior,
    PriorError,
)
from mcp_grover_schedules.features.prior.io import read_weights

logger = logging.getLogger(__name__)

# Row order of the published reference table
TABLE1_SPECS = (
    ("uniform", None),
    ("power", 1),
    ("power", 2),
    ("power", 3),
    ("power", 4),
    ("power", 5),
    ("exponential", 30.0),
    ("halfnormal", 18.0),
)


def table1_specs(N: int,
                 permutation_seed: Optional[int] = None
                 ) -> list[DistributionSpec]:
    """
    Build the eight reference distribution specs for a given N.
    
    Args:
        N: Search-set size
        permutation_seed: Optional seed applied to every spec
        
    Returns:
        List of DistributionSpec in reference-table order
    """
    return [
        DistributionSpec(family=family, N=N, param=param,
                         permutation_seed=permutation_seed)
        for family, param in TABLE1_SPECS
    ]


def _bin_edges(N: int) -> np.ndarray:
    return np.arange(N + 1, dtype=np.float64) / N


def _power_bins(N: int, n: int) -> np.ndarray:
    cdf = _bin_edges(N) ** (n + 1)
    return np.diff(cdf)


def _exponential_bins(N: int, c: float) -> np.ndarray:
    # p_i = e^{-c i/N} (1 - e^{-c/N}) / (1 - e^{-c})
    start = np.exp(-c * np.arange(N, dtype=np.float64) / N)
    return start * (-math.expm1(-c / N)) / (-math.expm1(-c))


def _halfnormal_bins(N: int, c: float) -> np.ndarray:
    x = math.sqrt(c) * _bin_edges(N)
    # erfc differences keep precision in the tail, erf near the origin
    low = np.diff(erf(x))
    high = -np.diff(erfc(x))
    bins = np.where(x[:-1] < 1.0, low, high)
    return bins / erf(math.sqrt(c))


def discretize(spec: DistributionSpec) -> Prior:
    """
    Discretize a distribution spec into a prior.
    
    The density is normalized on [0, 1] and integrated exactly over each
    of the N bins. When ``spec`` carries a permutation seed the binned
    vector is permuted with that seed.
    
    Args:
        spec: Distribution family, parameter and size
        
    Returns:
        Prior with N entries summing to 1
        
    Raises:
        PriorError: If the family is unknown or the parameters are invalid
    """
    N = spec.N
    if spec.family == "uniform":
        p = np.full(N, 1.0 / N)
    elif spec.family == "power":
        p = _power_bins(N, int(spec.param))
    elif spec.family == "exponential":
        p = _exponential_bins(N, float(spec.param))
    elif spec.family == "halfnormal":
        p = _halfnormal_bins(N, float(spec.param))
    elif spec.family == "custom":
        p = np.asarray(spec.values, dtype=np.float64)
    else:
        raise PriorError(f"unknown distribution family: {spec.family}")

    prior = Prior(p, label=spec.label)
    if spec.permutation_seed is not None:
        prior = permute(prior, spec.permutation_seed)
    logger.debug("Discretized %s over N=%d", prior.label, N)
    return prior


def permutation_indices(N: int, seed: int) -> np.ndarray:
    """
    Seeded uniformly random permutation of range(N).
    
    The shuffle is Fisher-Yates driven by a Philox counter-based
    generator keyed by ``seed``, so it is reproducible on every platform.
    """
    if not 0 <= seed < 2**64:
        raise PriorError("permutation seed must fit in 64 bits")
    rng = np.random.Generator(np.random.Philox(key=seed))
    order = np.arange(N)
    rng.shuffle(order)
    return order


def permute(prior: Prior, seed: int) -> Prior:
    """
    Randomly permute a prior's probabilities.
    
    Args:
        prior: Prior to permute
        seed: 64-bit seed of the permutation
        
    Returns:
        Prior holding the same multiset of values in permuted order
    """
    order = permutation_indices(prior.N, seed)
    label = prior.label
    if "@perm" not in label:
        label = f"{label}@perm{seed}"
    return Prior(prior.p[order], label=label)


def index_stddev(prior: Prior) -> float:
    """
    Standard deviation of the solution index under the prior.
    
    Args:
        prior: Prior over indices 0..N-1
        
    Returns:
        sigma = sqrt(sum p_i i^2 - (sum p_i i)^2), computed about the mean
    """
    index = np.arange(prior.N, dtype=np.float64)
    mean = np.sum(prior.p * index)
    variance = np.sum(prior.p * (index - mean) ** 2)
    return float(math.sqrt(max(variance, 0.0)))


def sorted_stddev(prior: Prior) -> float:
    """
    Index standard deviation of the prior sorted in descending order.
    
    This is the sigma that enters E/sqrt(sigma); it does not depend on the
    order in which the prior lists its elements.
    """
    ordered = np.sort(prior.p)[::-1]
    return index_stddev(Prior(ordered, label=prior.label))


def continuous_moments(spec: DistributionSpec) -> Tuple[float, float]:
    """
    Mean and standard deviation of the continuous density on [0, 1].
    
    Args:
        spec: Uniform, power, exponential or half-normal spec
        
    Returns:
        Tuple (mean, stddev) in units of the unit interval
        
    Raises:
        PriorError: For custom specs, which have no density
    """
    if spec.family == "uniform":
        first, second = 0.5, 1.0 / 3.0
    elif spec.family == "power":
        n = int(spec.param)
        first = (n + 1) / (n + 2)
        second = (n + 1) / (n + 3)
    elif spec.family == "exponential":
        c = float(spec.param)
        z = -math.expm1(-c)
        tail = math.exp(-c)
        x_moment = -tail + z / c
        first = x_moment / z
        second = (-tail + 2.0 * x_moment / c) / z
    elif spec.family == "halfnormal":
        c = float(spec.param)
        z = math.sqrt(math.pi) * math.erf(math.sqrt(c)) / (2 * math.sqrt(c))
        tail = math.exp(-c)
        first = -math.expm1(-c) / (2 * c * z)
        second = 1.0 / (2 * c) - tail / (2 * c * z)
    else:
        raise PriorError(f"{spec.family} spec has no continuous density")
    return first, math.sqrt(max(second - first * first, 0.0))


def parse_distribution(text: str, N: int,
                       permutation_seed: Optional[int] = None
                       ) -> DistributionSpec:
    """
    Parse the ``--dist`` grammar into a spec.
    
    Accepted forms: ``uniform``, ``power:<n>``, ``exp:<c>``,
    ``hnorm:<c>`` and ``custom:<path>``.
    
    Args:
        text: Distribution string
        N: Search-set size (ignored for custom, which brings its own)
        permutation_seed: Optional permutation seed
        
    Returns:
        DistributionSpec
        
    Raises:
        PriorError: If the string does not follow the grammar
    """
    family, _, arg = text.strip().partition(":")
    family = family.lower()
    if family == "uniform":
        if arg:
            raise PriorError("uniform takes no parameter")
        return DistributionSpec("uniform", N,
                                permutation_seed=permutation_seed)
    if family == "custom":
        values = read_weights(arg)
        return DistributionSpec("custom", len(values), values=values,
                                permutation_seed=permutation_seed)
    names = {"power": "power", "exp": "exponential",
             "hnorm": "halfnormal"}
    if family not in names:
        raise PriorError(f"unknown distribution family: {family}")
    try:
        value = float(arg)
    except ValueError:
        raise PriorError(f"invalid parameter for {family}: {arg!r}")
    return DistributionSpec(names[family], N, param=value,
                            permutation_seed=permutation_seed)


def load_prior(dist: str, size: int,
               permutation_seed: Optional[int] = None) -> Prior:
    """Parse a ``--dist`` string and discretize it in one go."""
    return discretize(parse_distribution(dist, size, permutation_seed))
