"""Greedy forwarding under a pluggable coordinate metric."""

from typing import Optional

from src.alignment import AlignmentTable
from src.errors import MissingAlignmentError
from src.geometry import Point, distance
from src.topology import NodeId, Topology

from .models import Metric


def check_table(m: Metric, table: AlignmentTable) -> None:
    if table.depth != m.table_depth:
        raise MissingAlignmentError(
            f"Metric {m.label} needs an alignment table of depth {m.table_depth}, got depth {table.depth}"
        )


def metric_distance(
    m: Metric,
    table: AlignmentTable,
    node: NodeId,
    dst_physical: Point,
    dst: Optional[NodeId] = None,
) -> float:
    """
    Distance from the node's (aligned) coordinate to the destination's PHYSICAL location.

    The destination is never aligned, so the destination node itself scores 0.

    Raises:
        MissingAlignmentError: table depth does not match the metric
    """
    check_table(m, table)
    if dst is not None and node == dst:
        return 0.0
    return distance(table[node], dst_physical)


def greedy_step(
    t: Topology,
    m: Metric,
    table: AlignmentTable,
    current: NodeId,
    dst: NodeId,
) -> Optional[NodeId]:
    """
    Neighbour with the strictly smallest metric distance, if it beats `current`.

    Ties go to the smallest node id. None means a void (local minimum).
    """
    dst_physical = t.positions[dst]
    best: Optional[NodeId] = None
    best_distance = metric_distance(m, table, current, dst_physical, dst)
    for neighbour in sorted(t.neighbors(current)):
        d = metric_distance(m, table, neighbour, dst_physical, dst)
        if d < best_distance:
            best, best_distance = neighbour, d
    return best
