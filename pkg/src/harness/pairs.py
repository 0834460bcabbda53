"""Seeded sampling of connected (src, dst) pairs."""

import bisect
from typing import List, Tuple

import numpy as np

from src.errors import NoConnectedPairsError
from src.topology import NodeId, Topology, connected_components

# Second word of the pair-sampling seed: PCG64([seed, PAIR_STREAM])
PAIR_STREAM = 1


def pair_stream(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64([seed, PAIR_STREAM]))


def sample_connected_pairs(t: Topology, count: int, seed: int) -> List[Tuple[NodeId, NodeId]]:
    """
    Draw `count` ordered pairs (src != dst, same component), uniformly over all such pairs.

    A component of size s holds s*(s-1) ordered pairs; it is picked with that weight,
    then two distinct members are drawn from it. Pairs may repeat.

    Raises:
        NoConnectedPairsError: every node is isolated
    """
    components = [sorted(c) for c in connected_components(t) if len(c) >= 2]
    if not components:
        raise NoConnectedPairsError(f"Topology seed={t.seed} has no connected pair")

    cumulative: List[int] = []
    total = 0
    for members in components:
        total += len(members) * (len(members) - 1)
        cumulative.append(total)

    rng = pair_stream(seed)
    pairs: List[Tuple[NodeId, NodeId]] = []
    for _ in range(count):
        members = components[bisect.bisect_right(cumulative, int(rng.integers(total)))]
        size = len(members)
        a = int(rng.integers(size))
        b = int(rng.integers(size - 1))
        if b >= a:
            b += 1
        pairs.append((members[a], members[b]))
    return pairs
