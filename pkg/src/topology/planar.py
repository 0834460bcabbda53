"""Gabriel planarization of a unit-disk topology (the graph GPSR's perimeter mode walks)."""

from typing import TYPE_CHECKING, List

from src.geometry import distance_sq, midpoint

if TYPE_CHECKING:
    from .topology import Adjacency, Topology


def is_gabriel_edge(t: "Topology", u: int, v: int) -> bool:
    """
    Keep (u, v) iff no witness w lies strictly inside the circle with diameter uv.

    Any such witness is closer to u than v is, hence a unit-disk neighbour of u,
    so only u's neighbours need checking.
    """
    pu, pv = t.positions[u], t.positions[v]
    mid = midpoint(pu, pv)
    radius_sq = distance_sq(pu, pv) / 4.0
    for w in t.adjacency[u]:
        if w == v:
            continue
        if distance_sq(t.positions[w], mid) < radius_sq:
            return False
    return True


def gabriel_planarize(t: "Topology") -> "Adjacency":
    """Planar adjacency: symmetric and a subset of t.adjacency."""
    kept: List[set] = [set() for _ in range(t.n)]
    for u in range(t.n):
        for v in t.adjacency[u]:
            if u < v and is_gabriel_edge(t, u, v):
                kept[u].add(v)
                kept[v].add(u)
    return tuple(frozenset(s) for s in kept)
