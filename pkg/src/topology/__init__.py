"""Static topologies: unit-disk generation, Gabriel planarization, BFS oracle, file format."""

from .topology import Adjacency, NodeId, Topology, from_explicit, generate_random, position_stream
from .planar import gabriel_planarize, is_gabriel_edge
from .oracle import bfs_shortest_hops, connected_components, is_connected
from .io import format_topology, load_topology, parse_topology, save_topology
from .fixtures import FIXTURES, SIX_NODE_LABELS

__all__ = [
    "Adjacency",
    "NodeId",
    "Topology",
    "from_explicit",
    "generate_random",
    "position_stream",
    "gabriel_planarize",
    "is_gabriel_edge",
    "bfs_shortest_hops",
    "connected_components",
    "is_connected",
    "format_topology",
    "load_topology",
    "parse_topology",
    "save_topology",
    "FIXTURES",
    "SIX_NODE_LABELS",
]
