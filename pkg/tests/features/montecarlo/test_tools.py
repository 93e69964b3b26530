from unittest.mock import patch

import numpy as np

from mcp_grover_schedules.features.montecarlo.tools import (
    _simulate_schedule_impl,
)
from mcp_grover_schedules.features.prior.common import Prior
from mcp_grover_schedules.features.schedule.common import (
    idle_schedule,
    uniform_schedule,
)


def test_simulate_schedule_impl():
    """Test the simulation record of a small schedule."""
    prior = Prior(np.ones(25))
    
    result = _simulate_schedule_impl(uniform_schedule(25, 3, 1.0), prior,
                                     trials=2000, seed=8)
    
    assert result.startswith("trials=2000 mode=relaxed seed=8 ")
    assert "meanIterations=" in result
    assert "histogram=" in result


def test_simulate_schedule_impl_invalid_mode():
    """Test that validation errors come back as error strings."""
    prior = Prior(np.ones(4))
    
    result = _simulate_schedule_impl(idle_schedule(4, 2), prior, 10, 1,
                                     mode="exact")
    
    assert result.startswith("Error: mode must be one of")


def test_simulate_schedule_impl_error():
    """Test error handling in simulate_schedule_impl."""
    prior = Prior(np.ones(4))
    
    with patch("mcp_grover_schedules.features.montecarlo.tools.simulate",
               side_effect=Exception("Test error")):
        result = _simulate_schedule_impl(idle_schedule(4, 2), prior, 10, 1)
    
    assert result == "Error simulating schedule: Test error"
