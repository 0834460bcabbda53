"""
Static wireless topologies.

A Topology is built once (from explicit positions or the seeded generator) and is
read-only afterwards: positions, unit-disk adjacency and the Gabriel planar subgraph
never change, so any number of workers can share one instance.
"""

import logging
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from src.errors import DuplicatePositionError, InvalidParamsError, UnknownNodeError
from src.geometry import DEGENERACY_EPS, Point, distance

logger = logging.getLogger(__name__)

NodeId = int
Adjacency = Tuple[FrozenSet[NodeId], ...]


class Topology:
    """Node positions + unit-disk connectivity. Node ids are dense: 0..n-1."""

    def __init__(
        self,
        positions: Sequence[Point],
        radio_range: float,
        seed: Optional[int] = None,
        labels: Optional[Sequence[str]] = None,
    ):
        if radio_range <= 0:
            raise InvalidParamsError(f"radio_range must be > 0, got {radio_range}")
        if not positions:
            raise InvalidParamsError("A topology needs at least one node")
        if labels is not None and len(labels) != len(positions):
            raise InvalidParamsError("labels and positions differ in length")

        self._positions: Tuple[Point, ...] = tuple(positions)
        self._radio_range = float(radio_range)
        self._seed = seed
        self._labels: Tuple[str, ...] = (
            tuple(labels) if labels is not None else tuple(str(i) for i in range(len(positions)))
        )
        if len(set(self._labels)) != len(self._labels):
            raise InvalidParamsError("Node labels must be unique")
        self._label_index: Dict[str, NodeId] = {label: i for i, label in enumerate(self._labels)}
        self._adjacency = self._unit_disk_adjacency()

    def _unit_disk_adjacency(self) -> Adjacency:
        """u ~ v iff 0 < |uv| <= radio_range (boundary inclusive)."""
        n = len(self._positions)
        neighbours: List[set] = [set() for _ in range(n)]
        for u in range(n):
            pu = self._positions[u]
            for v in range(u + 1, n):
                d = distance(pu, self._positions[v])
                if 0.0 < d <= self._radio_range:
                    neighbours[u].add(v)
                    neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    # === ACCESSORS ===

    @property
    def n(self) -> int:
        return len(self._positions)

    @property
    def positions(self) -> Tuple[Point, ...]:
        return self._positions

    @property
    def radio_range(self) -> float:
        return self._radio_range

    @property
    def seed(self) -> Optional[int]:
        return self._seed

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def adjacency(self) -> Adjacency:
        return self._adjacency

    @cached_property
    def planar_adjacency(self) -> Adjacency:
        """Gabriel subgraph of the unit-disk graph (used by perimeter routing)."""
        from .planar import gabriel_planarize

        return gabriel_planarize(self)

    @cached_property
    def graph(self) -> nx.Graph:
        """Full adjacency as a networkx graph (shortest-path and component oracle)."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def position(self, node: NodeId) -> Point:
        self.check_node(node)
        return self._positions[node]

    def neighbors(self, node: NodeId) -> FrozenSet[NodeId]:
        self.check_node(node)
        return self._adjacency[node]

    def edges(self, planar: bool = False) -> List[Tuple[NodeId, NodeId]]:
        """Undirected edges (u < v), sorted."""
        adjacency = self.planar_adjacency if planar else self._adjacency
        return sorted((u, v) for u in range(self.n) for v in adjacency[u] if u < v)

    def average_degree(self) -> float:
        return sum(len(s) for s in self._adjacency) / self.n

    def check_node(self, node: NodeId) -> None:
        if not isinstance(node, (int, np.integer)) or isinstance(node, bool) or not 0 <= node < self.n:
            raise UnknownNodeError(f"Unknown node id: {node!r}")

    def resolve(self, ref: Union[str, int]) -> NodeId:
        """Map a label (e.g. 'S') or a numeric id to a node id."""
        if isinstance(ref, str):
            if ref in self._label_index:
                return self._label_index[ref]
            if ref.isdigit() and int(ref) < self.n:
                return int(ref)
            raise UnknownNodeError(f"Unknown node: {ref!r}")
        self.check_node(ref)
        return int(ref)

    def label(self, node: NodeId) -> str:
        self.check_node(node)
        return self._labels[node]

    def transformed(self, positions: Sequence[Point], radio_range: Optional[float] = None) -> "Topology":
        """Same labels/seed, new positions (used for translation/rotation/scale studies)."""
        return Topology(
            positions,
            self._radio_range if radio_range is None else radio_range,
            seed=self._seed,
            labels=self._labels,
        )

    def __repr__(self) -> str:
        return f"Topology(n={self.n}, radio_range={self._radio_range}, seed={self._seed})"


def from_explicit(
    positions: Sequence[Point],
    radio_range: float,
    labels: Optional[Sequence[str]] = None,
) -> Topology:
    """
    Build a topology from given positions.

    Raises:
        InvalidParamsError: empty position list or radio_range <= 0
        DuplicatePositionError: two nodes closer than DEGENERACY_EPS
    """
    if not positions:
        raise InvalidParamsError("positions must be non-empty")
    for i in range(len(positions)):
        for j in range(i + 1, len(positions)):
            if distance(positions[i], positions[j]) < DEGENERACY_EPS:
                raise DuplicatePositionError(f"Nodes {i} and {j} coincide at {positions[i]}")
    return Topology(positions, radio_range, labels=labels)


def position_stream(seed: int) -> np.random.Generator:
    """The pinned PRNG for node placement: numpy PCG64 seeded with the plain integer seed."""
    return np.random.Generator(np.random.PCG64(seed))


def generate_random(n: int, width: float, height: float, radio_range: float, seed: int) -> Topology:
    """
    Place n nodes i.i.d. uniformly on [0, width) x [0, height).

    Draw order is fixed: one (n, 2) block of doubles, row i = (x_i / width, y_i / height),
    so the same arguments always produce bit-identical positions.

    Raises:
        InvalidParamsError: n < 2 or a non-positive dimension / range
    """
    if n < 2:
        raise InvalidParamsError(f"n must be >= 2, got {n}")
    if width <= 0 or height <= 0 or radio_range <= 0:
        raise InvalidParamsError(
            f"width, height and radio_range must be > 0 (got {width}, {height}, {radio_range})"
        )

    draws = position_stream(seed).random((n, 2))
    positions = [Point(float(u) * width, float(v) * height) for u, v in draws]
    topology = Topology(positions, radio_range, seed=seed)
    logger.debug(
        f"🗺️ Generated topology seed={seed} n={n} area={width}x{height} "
        f"range={radio_range} avg_degree={topology.average_degree():.2f}"
    )
    return topology
