"""
Connectivity-sensitive alignment.

A node's aligned coordinate is its position pushed toward the centroid of its
neighbours, by a distance equal to the spread of its neighbour distances:

    X_a   = mean of neighbour coordinates
    |XN|  = mean distance from X to its neighbours
    sigma = sqrt(sum (|XD_i| - |XN|)^2) / N       (AS_WRITTEN)
          = sqrt(sum (|XD_i| - |XN|)^2 / N)       (SAMPLE_STD)
    X'    = X + sigma * unit(X -> X_a)            (OFFSET_FROM_PHYSICAL)

Depth k applies one synchronous round to the depth k-1 table: every node reads only
depth k-1 coordinates, so a round's result does not depend on visiting order.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.errors import InvariantViolationError, IsolatedNodeError, ZeroVectorError
from src.geometry import DEGENERACY_EPS, ORIGIN, Point, centroid, distance, unit_vector
from src.topology import NodeId, Topology

from .params import DEFAULT_PARAMS, AlignmentParams, DepthAnchor, DeviationRule, DisplacementRule

logger = logging.getLogger(__name__)

# Slack for the "sigma never exceeds the farthest neighbour" check
DISPLACEMENT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class AlignmentTable:
    """Aligned coordinate of every node at one depth (depth 0 = physical positions)."""

    depth: int
    coords: Tuple[Point, ...]

    def __getitem__(self, node: NodeId) -> Point:
        return self.coords[node]

    def __len__(self) -> int:
        return len(self.coords)


def physical_table(t: Topology) -> AlignmentTable:
    return AlignmentTable(depth=0, coords=t.positions)


def _own_coordinate(t: Topology, table_prev: AlignmentTable, x: NodeId, params: AlignmentParams) -> Point:
    if params.depth_anchor is DepthAnchor.PHYSICAL:
        return t.positions[x]
    return table_prev[x]


def _neighbour_coordinates(t: Topology, table_prev: AlignmentTable, x: NodeId) -> List[Point]:
    neighbours = sorted(t.neighbors(x))
    if not neighbours:
        raise IsolatedNodeError(f"Node {t.label(x)} has no neighbours")
    return [table_prev[d] for d in neighbours]


def _deviation(distances: Sequence[float], rule: DeviationRule) -> float:
    count = len(distances)
    mean = math.fsum(distances) / count
    squares = math.fsum((d - mean) ** 2 for d in distances)
    if rule is DeviationRule.SAMPLE_STD:
        return math.sqrt(squares / count)
    return math.sqrt(squares) / count


def mean_neighbor_position(t: Topology, table_prev: AlignmentTable, x: NodeId) -> Point:
    """Centroid X_a of x's neighbours' depth-(k-1) coordinates.

    Raises:
        IsolatedNodeError: x has no neighbours
    """
    return centroid(_neighbour_coordinates(t, table_prev, x))


def mean_neighbor_distance(
    t: Topology,
    table_prev: AlignmentTable,
    x: NodeId,
    params: AlignmentParams = DEFAULT_PARAMS,
) -> float:
    """Mean |XD_i| over x's neighbours, all coordinates at depth k-1."""
    own = _own_coordinate(t, table_prev, x, params)
    distances = [distance(own, d) for d in _neighbour_coordinates(t, table_prev, x)]
    return math.fsum(distances) / len(distances)


def distance_deviation(
    t: Topology,
    table_prev: AlignmentTable,
    x: NodeId,
    params: AlignmentParams = DEFAULT_PARAMS,
) -> float:
    """sigma_X, the displacement magnitude |XX'| (always >= 0)."""
    own = _own_coordinate(t, table_prev, x, params)
    distances = [distance(own, d) for d in _neighbour_coordinates(t, table_prev, x)]
    return _deviation(distances, params.deviation_rule)


def _displace(own: Point, mean_position: Point, sigma: float, rule: DisplacementRule) -> Point:
    if rule is DisplacementRule.LITERAL_EQ4:
        return unit_vector(ORIGIN, mean_position).scale(sigma)
    if sigma == 0.0 or distance(own, mean_position) < DEGENERACY_EPS:
        return own
    return own + unit_vector(own, mean_position).scale(sigma)


def aligned_position(
    t: Topology,
    table_prev: AlignmentTable,
    x: NodeId,
    params: AlignmentParams = DEFAULT_PARAMS,
) -> Point:
    """
    X' for one node from the depth-(k-1) table.

    Never raises for degenerate neighbourhoods: isolated nodes and zero directions
    resolve to the physical position.
    """
    try:
        own = _own_coordinate(t, table_prev, x, params)
        neighbour_coords = _neighbour_coordinates(t, table_prev, x)
        distances = [distance(own, d) for d in neighbour_coords]
        sigma = _deviation(distances, params.deviation_rule)
        _check_bounded(t, x, sigma, distances)
        return _displace(own, centroid(neighbour_coords), sigma, params.displacement_rule)
    except IsolatedNodeError:
        logger.debug(f"Node {t.label(x)} is isolated, keeping physical position")
        return t.positions[x]
    except ZeroVectorError:
        logger.debug(f"Node {t.label(x)} has no alignment direction, keeping physical position")
        return t.positions[x]


def _check_bounded(t: Topology, x: NodeId, sigma: float, distances: Sequence[float]) -> None:
    if sigma > max(distances) + DISPLACEMENT_TOLERANCE:
        logger.error(f"❌ sigma={sigma} exceeds farthest neighbour {max(distances)} at node {t.label(x)}")
        raise InvariantViolationError(f"Displacement bound violated at node {t.label(x)}")


def align_round(t: Topology, table_prev: AlignmentTable, params: AlignmentParams = DEFAULT_PARAMS) -> AlignmentTable:
    """One synchronous alignment round: depth k-1 -> depth k."""
    coords = tuple(aligned_position(t, table_prev, x, params) for x in range(t.n))
    return AlignmentTable(depth=table_prev.depth + 1, coords=coords)


def align_series(t: Topology, max_depth: int, params: AlignmentParams = DEFAULT_PARAMS) -> List[AlignmentTable]:
    """Tables for depths 0..max_depth, each computed from the previous one."""
    if max_depth < 0:
        raise ValueError(f"depth must be >= 0, got {max_depth}")
    tables = [physical_table(t)]
    for _ in range(max_depth):
        tables.append(align_round(t, tables[-1], params))
    logger.debug(f"📐 Aligned {t.n} nodes to depth {max_depth} ({params.describe()})")
    return tables


def align_all(t: Topology, depth: int, params: AlignmentParams = DEFAULT_PARAMS) -> AlignmentTable:
    """Depth-`depth` alignment table; depth 0 is the physical positions."""
    return align_series(t, depth, params)[-1]
