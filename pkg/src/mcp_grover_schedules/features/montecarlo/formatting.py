"""
Formatting utilities for simulation reports.
"""
from typing import Optional

import numpy as np

from mcp_grover_schedules.features.montecarlo.common import SimulationReport


def format_simulation_report(report: SimulationReport,
                             histogram: Optional[np.ndarray] = None
                             ) -> str:
    """
    Format a simulation report as one key=value record.
    
    Args:
        report: Simulation result
        histogram: Optional per-step success counts
        
    Returns:
        Single-line record with every report field
    """
    fields = [
        f"trials={report.trials}",
        f"mode={report.mode}",
        f"seed={report.seed}",
        f"meanIterations={report.mean_iterations!r}",
        f"stderr={report.stderr!r}",
        f"analyticE={report.analytic_e!r}",
        f"z={report.z_score:.4f}",
    ]
    if histogram is not None:
        fields.append("histogram=" + ",".join(str(int(c)) for c in histogram))
    return " ".join(fields)
