"""Shortest-path and connectivity oracle over the full adjacency (networkx)."""

from typing import List, Optional, Set

import networkx as nx

from .topology import NodeId, Topology


def bfs_shortest_hops(t: Topology, src: NodeId, dst: NodeId) -> Optional[int]:
    """
    Minimum hop count from src to dst, or None when they are disconnected.

    Raises:
        UnknownNodeError: invalid id
    """
    t.check_node(src)
    t.check_node(dst)
    try:
        return nx.shortest_path_length(t.graph, src, dst)
    except nx.NetworkXNoPath:
        return None


def connected_components(t: Topology, planar: bool = False) -> List[Set[NodeId]]:
    """Components sorted by smallest member, so the order is deterministic."""
    if planar:
        g = nx.Graph()
        g.add_nodes_from(range(t.n))
        g.add_edges_from(t.edges(planar=True))
    else:
        g = t.graph
    return sorted((set(c) for c in nx.connected_components(g)), key=min)


def is_connected(t: Topology) -> bool:
    return nx.is_connected(t.graph)
