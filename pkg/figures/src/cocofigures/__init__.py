"""Read-only renderer for the simulator's schema-tagged CSV outputs.

Turns sweep, phase-diagram and eta-curve CSVs into image files with the
conventional styling: ring blue, complete green, intermediates in
distinct colors, dotted vertical line at the analytic critical shock.
"""

from .io import (
    EtaCurveData,
    PhaseData,
    SchemaError,
    SweepData,
    read_eta_curve_csv,
    read_phase_csv,
    read_sweep_csv,
    read_thresholds_json,
)
from .render import FigureSpec, render

__all__ = [
    "EtaCurveData",
    "FigureSpec",
    "PhaseData",
    "SchemaError",
    "SweepData",
    "read_eta_curve_csv",
    "read_phase_csv",
    "read_sweep_csv",
    "read_thresholds_json",
    "render",
]
