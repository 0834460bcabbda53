"""
Hand-built topologies with known routing behaviour.

six_node() places D=(3,0), E=(3,1); six_node_table() swaps them to D=(3,1), E=(3,0),
which is the placement that reproduces the |XD| column of the worked example
(|SD|=3, |AD|=2, |BD|=2.24, |ED|=1). Both use radio range 1.5.
"""

from typing import Callable, Dict, List, Tuple

from src.geometry import Point

from .topology import Topology, from_explicit

SIX_NODE_LABELS = ("S", "A", "B", "C", "D", "E")
SIX_NODE_RANGE = 1.5

_SIX_NODE_BASE = {
    "S": (0.0, 1.0),
    "A": (1.0, 1.0),
    "B": (1.0, 0.0),
    "C": (2.4, 0.0),
}


def _six_node(d: Tuple[float, float], e: Tuple[float, float]) -> Topology:
    coords = dict(_SIX_NODE_BASE, D=d, E=e)
    return from_explicit([Point(*coords[k]) for k in SIX_NODE_LABELS], SIX_NODE_RANGE, labels=SIX_NODE_LABELS)


def six_node() -> Topology:
    return _six_node(d=(3.0, 0.0), e=(3.0, 1.0))


def six_node_table() -> Topology:
    return _six_node(d=(3.0, 1.0), e=(3.0, 0.0))


def void_corridor() -> Topology:
    """
    Seven nodes bending around an empty region: S(0,0) ... D(4,0), range 1.5.

    S's only neighbour is farther from D than S, so greedy voids at S; the perimeter walk
    climbs the arc until N3, which is closer to D than S and resumes greedy.
    """
    coords: List[Tuple[str, Tuple[float, float]]] = [
        ("S", (0.0, 0.0)),
        ("N1", (-0.3, 1.2)),
        ("N2", (0.6, 2.2)),
        ("N3", (2.0, 2.6)),
        ("N4", (3.1, 1.9)),
        ("N5", (3.8, 0.9)),
        ("D", (4.0, 0.0)),
    ]
    return from_explicit([Point(*xy) for _, xy in coords], 1.5, labels=[k for k, _ in coords])


def symmetric_corridor() -> Topology:
    """Mirror-symmetric arc S(0,0) ... D(4,0): greedy voids at both ends, in both directions."""
    coords: List[Tuple[str, Tuple[float, float]]] = [
        ("S", (0.0, 0.0)),
        ("P1", (-0.3, 1.2)),
        ("P2", (0.6, 2.2)),
        ("P3", (2.0, 2.6)),
        ("P4", (3.4, 2.2)),
        ("P5", (4.3, 1.2)),
        ("D", (4.0, 0.0)),
    ]
    return from_explicit([Point(*xy) for _, xy in coords], 1.5, labels=[k for k, _ in coords])


FIXTURES: Dict[str, Callable[[], Topology]] = {
    "six_node": six_node,
    "six_node_table": six_node_table,
    "void_corridor": void_corridor,
    "symmetric_corridor": symmetric_corridor,
}
