"""Batch comparison harness: pair sampling, paired routing runs, asymmetry and reports."""

from .models import DeltaSummary, ExperimentReport, ModeMetrics, SeedReport
from .collector import RouteMetricsCollector
from .pairs import sample_connected_pairs
from .asymmetry import is_asymmetric, measure_asymmetry
from .experiment import SWEEP_PARAMETERS, metric_modes, run_experiment, run_seed, run_sweep, sweep_config
from .report import format_csv, format_sweep_csv, format_table, format_value

__all__ = [
    "DeltaSummary",
    "ExperimentReport",
    "ModeMetrics",
    "SeedReport",
    "RouteMetricsCollector",
    "sample_connected_pairs",
    "is_asymmetric",
    "measure_asymmetry",
    "SWEEP_PARAMETERS",
    "metric_modes",
    "run_experiment",
    "run_seed",
    "run_sweep",
    "sweep_config",
    "format_csv",
    "format_sweep_csv",
    "format_table",
    "format_value",
]
