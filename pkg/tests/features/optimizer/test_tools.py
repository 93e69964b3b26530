from unittest.mock import MagicMock, patch

from mcp_grover_schedules.features.optimizer.common import OptimizerConfig
from mcp_grover_schedules.features.optimizer.tools import (
    _optimize_schedule_impl,
    register_tools,
)
from mcp_grover_schedules.features.prior.common import DistributionSpec
from mcp_grover_schedules.features.prior.distributions import discretize
from mcp_grover_schedules.features.schedule.io import read_schedule


def _registered_tools():
    tools = {}
    mcp = MagicMock()
    
    def tool():
        def decorator(fn):
            tools[fn.__name__] = fn
            return fn
        return decorator
    
    mcp.tool.side_effect = tool
    register_tools(mcp)
    return tools


def test_optimize_schedule_impl_writes_plan(tmp_path):
    """Test that an optimization report comes with a plan file."""
    prior = discretize(DistributionSpec("power", 40, param=1))
    path = tmp_path / "run.plan"
    
    result = _optimize_schedule_impl(prior, OptimizerConfig(n=3),
                                     str(path))
    
    assert "# Optimized schedule: 2x" in result
    assert "Converged: yes" in result
    assert "- step 2: m=" in result
    assert "## Max relative residuals" in result
    assert f"Plan written to: {path}" in result
    schedule, lambdas = read_schedule(path)
    assert schedule.n == 3
    assert lambdas.size == 2


def test_optimize_schedule_impl_error():
    """Test error handling in optimize_schedule_impl."""
    prior = discretize(DistributionSpec("uniform", 10))
    
    with patch("mcp_grover_schedules.features.optimizer.tools.optimize",
               side_effect=Exception("Test error")):
        result = _optimize_schedule_impl(prior, OptimizerConfig())
    
    assert result == "Error optimizing schedule: Test error"


def test_optimize_schedule_tool_bad_distribution():
    """Test that invalid arguments come back as an error string."""
    tools = _registered_tools()
    
    result = tools["optimize_schedule"](dist="gamma:2", size=10)
    
    assert result == "Error: unknown distribution family: gamma"


def test_optimize_schedule_tool_bad_steps():
    """Test that invalid optimizer settings come back as an error."""
    tools = _registered_tools()
    
    result = tools["optimize_schedule"](dist="uniform", size=10, steps=0)
    
    assert result.startswith("Error: need at least one step")
