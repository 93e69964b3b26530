from mcp_grover_schedules.features.prior.common import (
    DistributionSpec,
    Prior,
)
from mcp_grover_schedules.features.prior.distributions import discretize
from mcp_grover_schedules.features.schedule.common import (
    idle_schedule,
    uniform_schedule,
)
from mcp_grover_schedules.features.schedule.tools import (
    _evaluate_schedule_impl,
)


def test_evaluate_schedule_impl_idle():
    """Test the report of a schedule that never leaves standard Grover."""
    prior = discretize(DistributionSpec("uniform", 100))
    
    result = _evaluate_schedule_impl(idle_schedule(100, 3), prior)
    
    assert "# Schedule cost: 1" in result
    assert "n: 3" in result
    assert "E/sqrtN: 0.785398" in result
    assert "Improvement:" in result
    assert "- step 2: m=0.000000" in result


def test_evaluate_schedule_impl_uniform_strategy():
    """Test that repeated short searches beat standard Grover."""
    prior = discretize(DistributionSpec("uniform", 100))
    
    result = _evaluate_schedule_impl(uniform_schedule(100, 10, 4.0), prior)
    
    assert "# Schedule cost: 1" in result
    assert "Improvement: -" not in result


def test_evaluate_schedule_impl_error():
    """Test error handling in evaluate_schedule_impl."""
    result = _evaluate_schedule_impl(idle_schedule(5, 2),
                                     Prior([1.0, 1.0]))
    
    assert "Error evaluating schedule: prior has N=2" in result
