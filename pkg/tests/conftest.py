"""Shared builders for the simulator tests. Everything is seeded, nothing touches the network."""

from pathlib import Path
from typing import Callable, Iterator, List, Tuple

import numpy as np
import pytest

from src.geometry import Point
from src.topology import Topology, from_explicit, generate_random, is_connected

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


def connected_topologies(count: int, n: int, side: float, radio_range: float, start_seed: int = 0) -> Iterator[Topology]:
    """The first `count` connected random topologies from consecutive seeds."""
    seed = start_seed
    found = 0
    while found < count:
        t = generate_random(n, side, side, radio_range, seed)
        seed += 1
        if is_connected(t):
            found += 1
            yield t


def random_points(rng: np.random.Generator, n: int, side: float = 1.0) -> List[Point]:
    return [Point(float(x), float(y)) for x, y in rng.random((n, 2)) * side]


def grid(rows: int, cols: int) -> Topology:
    """Integer lattice with spacing 1 and range 1: every neighbour is exactly 1 away."""
    return from_explicit([Point(c, r) for r in range(rows) for c in range(cols)], 1.0)


def path_topology(xs: List[Tuple[float, float]], radio_range: float) -> Topology:
    return from_explicit([Point(x, y) for x, y in xs], radio_range)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def make_connected() -> Callable[..., Iterator[Topology]]:
    return connected_topologies
