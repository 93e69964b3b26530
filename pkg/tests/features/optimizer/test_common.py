import math

import pytest

from mcp_grover_schedules.features.optimizer.common import (
    OptimizerConfig,
    OptimizerError,
)
from mcp_grover_schedules.utils.config import Settings


@pytest.mark.parametrize("kwargs", [
    {"n": 0},
    {"tol_e": 0.0},
    {"newton_tol": -1.0},
    {"max_outer_iterations": 0},
    {"lambda_init": -0.5},
    {"lambda_init": math.inf},
])
def test_optimizer_config_validation(kwargs):
    """Test that invalid optimizer settings are rejected."""
    with pytest.raises(OptimizerError):
        OptimizerConfig(**kwargs)


def test_optimizer_config_from_settings():
    """Test that explicit values override environment defaults."""
    settings = Settings(steps=4, tol=1e-8, max_outer=50)
    
    config = OptimizerConfig.from_settings(settings, n=7, tol_e=None)
    
    assert config.n == 7
    assert config.tol_e == 1e-8
    assert config.max_outer_iterations == 50


def test_initial_lambda():
    """Test the default and explicit starting multipliers."""
    assert OptimizerConfig().initial_lambda(10000) == pytest.approx(1 / 800)
    assert OptimizerConfig(lambda_init=0.5).initial_lambda(10000) == 0.5
