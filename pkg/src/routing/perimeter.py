"""
GPSR perimeter mode on the Gabriel subgraph.

Faces are walked with the right-hand rule: the next edge is the first one counterclockwise
about the current node from the edge the packet arrived on (or from the line to the
destination on the first perimeter hop). All geometry here is physical, even when greedy
decisions use aligned coordinates.
"""

import math
from typing import Optional

from src.geometry import Point, bearing, distance, segment_intersection, segments_cross
from src.topology import NodeId, Topology

from .models import Packet, Phase

TWO_PI = 2.0 * math.pi


def _counterclockwise_angle(reference: float, target: float) -> float:
    """Sweep angle from `reference` to `target` in (0, 2pi]; the reference itself comes last."""
    angle = (target - reference) % TWO_PI
    return angle if angle > 0.0 else TWO_PI


def right_hand_neighbour(t: Topology, current: NodeId, reference_bearing: float) -> Optional[NodeId]:
    """First planar neighbour counterclockwise from `reference_bearing`; ties by node id."""
    here = t.positions[current]
    candidates = t.planar_adjacency[current]
    if not candidates:
        return None
    return min(
        sorted(candidates),
        key=lambda v: _counterclockwise_angle(reference_bearing, bearing(here, t.positions[v])),
    )


def perimeter_step(t: Topology, pkt: Packet, current: NodeId) -> Optional[NodeId]:
    """
    Next perimeter hop, or None when the walk would repeat its first edge (or the node
    has no planar neighbour): the destination is unreachable from this face.

    Updates the packet's face state (face point, first edge) in place.
    """
    if pkt.mode is not Phase.PERIMETER:
        raise ValueError("perimeter_step called on a packet in greedy mode")

    here = t.positions[current]

    if pkt.first_perimeter_edge is None:
        nxt = right_hand_neighbour(t, current, bearing(here, pkt.dst_physical))
        if nxt is not None:
            pkt.first_perimeter_edge = (current, nxt)
        return nxt

    nxt = right_hand_neighbour(t, current, bearing(here, t.positions[pkt.previous]))
    if nxt is None:
        return None

    changed_face = False
    for _ in range(len(t.planar_adjacency[current])):
        if not _crosses_closer(pkt, here, t.positions[nxt]):
            break
        pkt.face_point = segment_intersection(here, t.positions[nxt], pkt.face_point, pkt.dst_physical)
        nxt = right_hand_neighbour(t, current, bearing(here, t.positions[nxt]))
        pkt.first_perimeter_edge = (current, nxt)
        changed_face = True

    if not changed_face and (current, nxt) == pkt.first_perimeter_edge:
        return None
    return nxt


def _crosses_closer(pkt: Packet, here: Point, there: Point) -> bool:
    """Edge here->there properly crosses face_point->dst at a point closer to dst than face_point."""
    if not segments_cross(here, there, pkt.face_point, pkt.dst_physical):
        return False
    crossing = segment_intersection(here, there, pkt.face_point, pkt.dst_physical)
    return distance(crossing, pkt.dst_physical) < distance(pkt.face_point, pkt.dst_physical)
