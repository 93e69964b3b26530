import math

import numpy as np
import pytest

from mcp_grover_schedules.features.montecarlo.common import (
    SimulationError,
    SimulationReport,
)
from mcp_grover_schedules.features.montecarlo.formatting import (
    format_simulation_report,
)
from mcp_grover_schedules.features.montecarlo.simulate import (
    BLOCK_SIZE,
    analytic_step_masses,
    run_trials,
    simulate,
    success_step_histogram,
)
from mcp_grover_schedules.features.optimizer.common import OptimizerConfig
from mcp_grover_schedules.features.optimizer.sweep import optimize
from mcp_grover_schedules.features.prior.common import (
    DistributionSpec,
    Prior,
)
from mcp_grover_schedules.features.prior.distributions import discretize
from mcp_grover_schedules.features.schedule.common import (
    grover_baseline,
    idle_schedule,
    uniform_schedule,
)


@pytest.fixture(scope="module")
def optimized():
    prior = discretize(DistributionSpec("power", 400, param=2))
    state = optimize(prior, OptimizerConfig(n=6, tol_e=1e-9))
    return state.schedule, prior


def test_idle_schedule_costs_are_exact():
    """Test that every trial of an idle schedule pays the final step."""
    prior = discretize(DistributionSpec("uniform", 16))
    
    report = simulate(idle_schedule(16, 3), prior, 1000, seed=5)
    
    assert report.mean_iterations == pytest.approx(grover_baseline(16))
    assert report.stderr == pytest.approx(0.0, abs=1e-9)
    assert report.analytic_e == pytest.approx(grover_baseline(16))


def test_simulation_agrees_with_analytic_cost(optimized):
    """Test the mean of many trials against the expected cost."""
    schedule, prior = optimized
    
    report = simulate(schedule, prior, 200000, seed=7)
    
    assert report.mode == "relaxed"
    assert report.trials == 200000
    assert report.z_score < 4


def test_uniform_optimum_simulation():
    """Test simulation of the optimized uniform schedule."""
    prior = discretize(DistributionSpec("uniform", 10**4))
    state = optimize(prior, OptimizerConfig(n=10, tol_e=1e-6))
    
    report = simulate(state.schedule, prior, 10**6, seed=2024)
    
    assert abs(report.mean_iterations - state.E) < 3 * report.stderr


def test_histogram_matches_step_masses(optimized):
    """Test per-step success counts against the survival masses."""
    schedule, prior = optimized
    trials = 100000
    
    counts = success_step_histogram(schedule, prior, trials, seed=3)
    masses = analytic_step_masses(schedule, prior)
    
    assert counts.sum() == trials
    assert masses.sum() == pytest.approx(1.0, abs=1e-12)
    spread = np.sqrt(trials * masses * (1 - masses))
    assert np.all(np.abs(counts - trials * masses) <= 4 * spread + 1)


def test_simulation_is_reproducible(optimized):
    """Test that equal seeds give equal reports."""
    schedule, prior = optimized
    
    first = simulate(schedule, prior, 5000, seed=11)
    second = simulate(schedule, prior, 5000, seed=11)
    other = simulate(schedule, prior, 5000, seed=12)
    
    assert first == second
    assert other.mean_iterations != first.mean_iterations


def test_blocks_are_independent_of_trial_count(optimized):
    """Test that the first block does not depend on later ones."""
    schedule, prior = optimized
    
    short, _ = run_trials(schedule, prior, BLOCK_SIZE, seed=9)
    long, _ = run_trials(schedule, prior, BLOCK_SIZE + 10, seed=9)
    
    np.testing.assert_array_equal(long[:BLOCK_SIZE], short)


def test_integer_mode_rounds_final_step():
    """Test that whole iteration counts only change the final step."""
    N = 100
    schedule = uniform_schedule(N, 3, 2.0)
    prior = discretize(DistributionSpec("uniform", N))
    
    relaxed, found_relaxed = run_trials(schedule, prior, 20000, seed=4)
    integer, found_integer = run_trials(schedule, prior, 20000, seed=4,
                                        mode="integer")
    
    np.testing.assert_array_equal(found_integer, found_relaxed)
    extra = math.ceil(grover_baseline(N)) - grover_baseline(N)
    np.testing.assert_allclose(
        integer - relaxed, np.where(found_relaxed == 3, extra, 0.0),
        atol=1e-12)


def test_integer_mode_rounds_half_to_even():
    """Test that m = 2.5 runs two iterations in integer mode."""
    N = 64
    prior = Prior(np.ones(N))
    schedule = uniform_schedule(N, 2, 2.5)
    
    integer, found = run_trials(schedule, prior, 1000, seed=1,
                                mode="integer")
    
    paid_first = integer[found == 1]
    assert np.all(paid_first == 2.0)


@pytest.mark.parametrize("kwargs", [
    {"trials": 0},
    {"seed": -1},
    {"seed": 2**64},
    {"mode": "exact"},
])
def test_simulate_rejects_bad_arguments(kwargs):
    """Test argument validation."""
    prior = Prior(np.ones(4))
    arguments = {"trials": 10, "seed": 1, "mode": "relaxed"}
    arguments.update(kwargs)
    
    with pytest.raises(SimulationError):
        simulate(idle_schedule(4, 2), prior, **arguments)


def test_simulate_size_mismatch():
    """Test that the prior must match the schedule."""
    with pytest.raises(SimulationError, match="N=3"):
        simulate(idle_schedule(4, 2), Prior(np.ones(3)), 10, seed=1)


# Tests for reports
def test_z_score():
    """Test the z-score including the zero-spread case."""
    report = SimulationReport(trials=10, mean_iterations=5.0, stderr=0.5,
                              analytic_e=4.0, mode="relaxed", seed=1)
    exact = SimulationReport(trials=10, mean_iterations=4.0, stderr=0.0,
                             analytic_e=4.0, mode="relaxed", seed=1)
    
    assert report.z_score == 2.0
    assert exact.z_score == 0.0


def test_format_simulation_report():
    """Test the single-line record."""
    report = SimulationReport(trials=10, mean_iterations=5.0, stderr=0.5,
                              analytic_e=4.0, mode="integer", seed=3)
    
    text = format_simulation_report(report, np.array([6, 3, 1]))
    
    assert "\n" not in text
    assert text == ("trials=10 mode=integer seed=3 meanIterations=5.0 "
                    "stderr=0.5 analyticE=4.0 z=2.0000 histogram=6,3,1")
