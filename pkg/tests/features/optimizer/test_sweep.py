import math

import numpy as np
import pytest
from scipy.optimize import minimize, minimize_scalar

from mcp_grover_schedules.features.optimizer.common import (
    OptimizerConfig,
    OptimizerError,
)
from mcp_grover_schedules.features.optimizer.sweep import (
    downstream_weight,
    downstream_weights,
    initial_state,
    optimality_residuals,
    optimize,
    reach_probability,
    sweep,
    sweep_step,
)
from mcp_grover_schedules.features.prior.common import (
    DistributionSpec,
    Prior,
)
from mcp_grover_schedules.features.prior.distributions import discretize
from mcp_grover_schedules.features.schedule.common import (
    HALF_PI,
    Schedule,
    grover_baseline,
)
from mcp_grover_schedules.features.schedule.cost import expected_cost


def _prior(family: str, N: int, param=None, seed=None) -> Prior:
    return discretize(DistributionSpec(family, N, param=param,
                                       permutation_seed=seed))


# Tests for the downstream weights
def test_downstream_weights_match_definition():
    """Test S_i against its defining sum over later steps."""
    rng = np.random.default_rng(8)
    schedule = Schedule(5, rng.uniform(0.5, 2.0, 3),
                        rng.uniform(0.0, HALF_PI, (3, 5)))
    failure = np.cos(schedule.theta) ** 2
    m = list(schedule.m) + [schedule.m_final]
    
    for step in (1, 2, 3):
        expected = np.zeros(5)
        for j in range(step + 1, 5):
            product = np.ones(5)
            for k in range(1, j):
                if k != step:
                    product *= failure[k - 1]
            expected += m[j - 1] * product
        np.testing.assert_allclose(downstream_weights(schedule, step),
                                   expected, rtol=1e-14)
        assert downstream_weight(schedule, step, 2) == pytest.approx(
            expected[2], rel=1e-14)


def test_downstream_weight_index_range():
    """Test that the index must lie in the search set."""
    schedule = Schedule(3, [1.0], [[0.1, 0.2, 0.3]])
    
    with pytest.raises(OptimizerError):
        downstream_weight(schedule, 1, 3)


def test_reach_probability_first_step():
    """Test that every index reaches the first step."""
    schedule = Schedule(3, [1.0, 1.0], [[0.1, 0.2, 0.3], [0.3, 0.2, 0.1]])
    
    assert reach_probability(schedule, 1).tolist() == [1.0, 1.0, 1.0]
    np.testing.assert_allclose(reach_probability(schedule, 2),
                               np.cos([0.1, 0.2, 0.3]) ** 2)


# Tests for a single sweep step
def test_sweep_step_enforces_constraint_and_multiplier():
    """Test that one update satisfies the m and lambda equations."""
    prior = _prior("power", 100, param=1)
    config = OptimizerConfig(n=4)
    state = initial_state(prior, config)
    
    updated = sweep_step(state, prior, 1, config)
    
    theta = updated.schedule.theta[0]
    m = updated.schedule.m[0]
    assert m > 0
    assert 4 * m * m == pytest.approx(np.sum(theta * theta), rel=1e-14)
    assert updated.lambdas[0] == pytest.approx(1 / (8 * m), rel=1e-14)
    assert state.schedule.m[0] == 0.0


def test_sweep_step_recovers_from_collapse():
    """Test that an oversized multiplier is halved until angles appear."""
    prior = _prior("uniform", 100)
    config = OptimizerConfig(n=3, lambda_init=1e3)
    
    updated = sweep_step(initial_state(prior, config), prior, 1, config)
    
    assert updated.schedule.m[0] > 0


def test_sweep_step_size_mismatch():
    """Test that the prior must match the schedule size."""
    prior = _prior("uniform", 10)
    state = initial_state(_prior("uniform", 12), OptimizerConfig(n=3))
    
    with pytest.raises(OptimizerError):
        sweep_step(state, prior, 1)


# Tests for full sweeps
def test_sweep_matches_successive_steps():
    """Test that one sweep equals updating each step in turn."""
    prior = _prior("exponential", 300, param=30.0)
    config = OptimizerConfig(n=5)
    state = initial_state(prior, config)
    for _ in range(3):
        state = sweep(state, prior, config)
    
    stepped = state
    for step in range(1, 5):
        stepped = sweep_step(stepped, prior, step, config)
    swept = sweep(state, prior, config)
    
    np.testing.assert_allclose(swept.schedule.theta, stepped.schedule.theta,
                               rtol=1e-13, atol=1e-15)
    np.testing.assert_allclose(swept.schedule.m, stepped.schedule.m,
                               rtol=1e-13)
    np.testing.assert_allclose(swept.lambdas, stepped.lambdas, rtol=1e-13)
    assert swept.E == pytest.approx(stepped.E, rel=1e-13)


def test_sweep_without_optimized_steps():
    """Test that a single-step schedule is left unchanged."""
    prior = _prior("uniform", 10)
    state = initial_state(prior, OptimizerConfig(n=1))
    
    assert sweep(state, prior) is state


def test_sweep_size_mismatch():
    """Test that a full sweep also checks the prior size."""
    state = initial_state(_prior("uniform", 12), OptimizerConfig(n=3))
    
    with pytest.raises(OptimizerError):
        sweep(state, _prior("uniform", 10))


# Tests for optimize
def test_optimize_single_step():
    """Test that n = 1 returns the standard Grover cost."""
    prior = _prior("power", 50, param=2)
    
    state = optimize(prior, OptimizerConfig(n=1))
    
    assert state.converged
    assert state.E == grover_baseline(50)
    assert state.residuals.worst() == 0.0


def test_optimize_two_step_uniform_optimum():
    """Test n = 2 against the one-dimensional minimum over theta."""
    N = 64
    
    def cost(theta):
        return theta / 2 + math.pi / 4 * math.cos(theta) ** 2
    
    best = minimize_scalar(cost, bounds=(0.5, HALF_PI), method="bounded",
                           options={"xatol": 1e-12})
    state = optimize(_prior("uniform", N), OptimizerConfig(n=2, tol_e=1e-13))
    
    assert state.converged
    assert best.x == pytest.approx((math.pi - math.asin(2 / math.pi)) / 2,
                                   abs=1e-6)
    np.testing.assert_allclose(state.schedule.theta[0], best.x, atol=1e-4)
    assert state.E / math.sqrt(N) == pytest.approx(best.fun, abs=1e-6)


def test_optimize_uniform_ratio():
    """Test the reference ratio E/sqrt(N) = 0.690 for the uniform prior."""
    N = 100
    
    state = optimize(_prior("uniform", N),
                     OptimizerConfig(n=10, tol_e=1e-10))
    
    assert state.converged
    assert state.E / math.sqrt(N) == pytest.approx(0.690, abs=0.005)
    assert np.all(state.schedule.m > 0)
    assert state.history[-1] == state.E
    assert len(state.history) == state.iterations


@pytest.mark.parametrize("family, param", [
    ("uniform", None),
    ("power", 2),
])
def test_optimize_cost_does_not_increase_after_transient(family, param):
    """Test that E never rises between sweeps after the first ten."""
    state = optimize(_prior(family, 400, param=param),
                     OptimizerConfig(n=10, tol_e=1e-10))
    tail = np.array(state.history[9:])
    
    assert state.converged
    assert np.all(np.diff(tail) <= 1e-12 * state.E)


def test_optimize_matches_direct_minimization():
    """Test n = 2 at N = 8 against a generic bounded minimizer."""
    prior = _prior("power", 8, param=1)
    mF = grover_baseline(8)
    
    def cost(theta):
        return (0.5 * np.sqrt(np.sum(theta * theta))
                + mF * np.sum(prior.p * np.cos(theta) ** 2))
    
    best = min(
        (minimize(cost, np.full(8, start), method="L-BFGS-B",
                  bounds=[(0.0, HALF_PI)] * 8,
                  options={"ftol": 1e-15, "gtol": 1e-12})
         for start in (0.5, 1.0, 1.4)),
        key=lambda result: result.fun)
    state = optimize(prior, OptimizerConfig(n=2, tol_e=1e-12))
    
    assert state.E == pytest.approx(best.fun, rel=1e-3)


def test_optimize_residuals_at_convergence():
    """Test the optimality conditions of a converged schedule."""
    prior = _prior("power", 50, param=1)
    
    state = optimize(prior, OptimizerConfig(n=5, tol_e=1e-13))
    residuals = optimality_residuals(state, prior)
    
    assert state.converged
    assert np.max(residuals.multiplier) < 1e-12
    assert np.max(residuals.constraint) < 1e-12
    assert np.max(residuals.angle) < 1e-5
    assert state.E <= grover_baseline(50)


def test_optimize_resists_perturbation():
    """Test that norm-preserving angle perturbations do not lower E."""
    prior = _prior("power", 2000, param=2)
    state = optimize(prior, OptimizerConfig(n=4, tol_e=1e-11))
    schedule = state.schedule
    rng = np.random.default_rng(21)
    
    for _ in range(100):
        step = int(rng.integers(0, schedule.n - 1))
        theta = schedule.theta.copy()
        row = theta[step]
        active = row > 0
        moved = row[active] * (1 + 1e-3 * rng.standard_normal(active.sum()))
        moved *= np.linalg.norm(row[active]) / np.linalg.norm(moved)
        row[active] = np.minimum(moved, HALF_PI)
        perturbed = Schedule(schedule.N, schedule.m, theta)
        E = expected_cost(perturbed, prior).E
        assert E >= state.E * (1 - 1e-9)


def test_optimize_permutation_invariance():
    """Test that a permuted prior reaches the same cost."""
    config = OptimizerConfig(n=6, tol_e=1e-10)
    
    ordered = optimize(_prior("power", 200, param=2), config)
    shuffled = optimize(_prior("power", 200, param=2, seed=17), config)
    
    assert shuffled.E == pytest.approx(ordered.E, rel=1e-9)


@pytest.mark.parametrize("scale", [0.1, 10.0, 0.01])
def test_optimize_initial_multiplier(scale):
    """Test that the optimum does not depend on the starting multiplier."""
    N = 100
    prior = _prior("uniform", N)
    reference = optimize(prior, OptimizerConfig(n=10, tol_e=1e-10))
    
    state = optimize(prior, OptimizerConfig(
        n=10, tol_e=1e-10, lambda_init=scale / (8 * math.sqrt(N))))
    
    assert state.converged
    assert state.E == pytest.approx(reference.E, rel=1e-7)


def test_optimize_reports_non_convergence():
    """Test the result of a run that hits the iteration limit."""
    prior = _prior("uniform", 100)
    
    state = optimize(prior, OptimizerConfig(n=5, max_outer_iterations=1))
    
    assert not state.converged
    assert state.iterations == 1
    assert len(state.history) == 1
    assert any("no convergence" in note for note in state.warnings)


def test_optimize_warns_on_concentrated_prior():
    """Test the small-angle validity warning."""
    state = optimize(Prior([0.8, 0.1, 0.1]), OptimizerConfig(n=1))
    
    assert any("small-angle" in note for note in state.warnings)
