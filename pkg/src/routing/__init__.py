"""Greedy / perimeter geographic routing over physical or aligned coordinates."""

from .models import Metric, MetricMode, Outcome, Packet, Phase, RouteTrace
from .greedy import check_table, greedy_step, metric_distance
from .perimeter import perimeter_step, right_hand_neighbour
from .router import default_ttl, greedy_phases_decreasing, route
from .io import format_trace, parse_trace

__all__ = [
    "Metric",
    "MetricMode",
    "Outcome",
    "Packet",
    "Phase",
    "RouteTrace",
    "check_table",
    "greedy_step",
    "metric_distance",
    "perimeter_step",
    "right_hand_neighbour",
    "default_ttl",
    "greedy_phases_decreasing",
    "route",
    "format_trace",
    "parse_trace",
]
