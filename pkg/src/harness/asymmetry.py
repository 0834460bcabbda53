"""Path asymmetry: one direction needs perimeter recovery while the other stays greedy."""

from typing import Iterable, Optional, Tuple

from src.alignment import AlignmentTable
from src.routing import Metric, RouteTrace, route
from src.topology import NodeId, Topology


def is_asymmetric(forward: RouteTrace, backward: RouteTrace) -> bool:
    return forward.pure_greedy != backward.pure_greedy


def measure_asymmetry(
    t: Topology,
    m: Metric,
    table: Optional[AlignmentTable],
    pairs: Iterable[Tuple[NodeId, NodeId]],
    ttl: Optional[int] = None,
) -> float:
    """Fraction of pairs whose two directions disagree on needing a perimeter hop (0.0 for no pairs)."""
    total = 0
    asymmetric = 0
    for a, b in pairs:
        total += 1
        forward = route(t, m, table, a, b, ttl)
        backward = route(t, m, table, b, a, ttl)
        if is_asymmetric(forward, backward):
            asymmetric += 1
    return asymmetric / total if total else 0.0
