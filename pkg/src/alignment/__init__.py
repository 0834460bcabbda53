"""Connectivity-sensitive aligned coordinates at any depth."""

from .params import DEFAULT_PARAMS, AlignmentParams, DepthAnchor, DeviationRule, DisplacementRule
from .aligner import (
    AlignmentTable,
    align_all,
    align_round,
    align_series,
    aligned_position,
    distance_deviation,
    mean_neighbor_distance,
    mean_neighbor_position,
    physical_table,
)
from .io import format_table, parse_table

__all__ = [
    "DEFAULT_PARAMS",
    "AlignmentParams",
    "DepthAnchor",
    "DeviationRule",
    "DisplacementRule",
    "AlignmentTable",
    "align_all",
    "align_round",
    "align_series",
    "aligned_position",
    "distance_deviation",
    "mean_neighbor_distance",
    "mean_neighbor_position",
    "physical_table",
    "format_table",
    "parse_table",
]
