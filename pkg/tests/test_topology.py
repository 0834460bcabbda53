"""Unit-disk topologies: generation, adjacency, BFS oracle and the text format."""

import math

import numpy as np
import pytest

from src.errors import DuplicatePositionError, FormatError, InvalidParamsError, UnknownNodeError
from src.geometry import Point, distance
from src.topology import (
    FIXTURES,
    bfs_shortest_hops,
    connected_components,
    format_topology,
    from_explicit,
    generate_random,
    load_topology,
    parse_topology,
    save_topology,
)


def test_same_seed_gives_identical_positions():
    a = generate_random(200, 2000, 2000, 250, seed=42)
    b = generate_random(200, 2000, 2000, 250, seed=42)
    assert a.positions == b.positions
    assert format_topology(a) == format_topology(b)


def test_different_seeds_differ():
    a = generate_random(50, 100, 100, 20, seed=1)
    b = generate_random(50, 100, 100, 20, seed=2)
    assert a.positions != b.positions


def test_positions_stay_inside_the_area():
    t = generate_random(500, 30.0, 10.0, 2.0, seed=7)
    assert all(0 <= p.x < 30.0 and 0 <= p.y < 10.0 for p in t.positions)


def test_positions_follow_the_pinned_pcg64_stream():
    t = generate_random(5, 10.0, 20.0, 1.0, seed=3)
    draws = np.random.Generator(np.random.PCG64(3)).random((5, 2))
    assert [(p.x, p.y) for p in t.positions] == [(u * 10.0, v * 20.0) for u, v in draws]


@pytest.mark.parametrize(
    "n,width,height,radio_range",
    [(1, 10, 10, 1), (5, 0, 10, 1), (5, 10, -1, 1), (5, 10, 10, 0)],
)
def test_invalid_generator_params(n, width, height, radio_range):
    with pytest.raises(InvalidParamsError):
        generate_random(n, width, height, radio_range, seed=0)


def test_adjacency_is_symmetric_irreflexive_and_unit_disk():
    t = generate_random(80, 10, 10, 2.0, seed=5)
    for u in range(t.n):
        assert u not in t.neighbors(u)
        for v in range(t.n):
            if u == v:
                continue
            linked = v in t.neighbors(u)
            assert linked == (u in t.neighbors(v))
            assert linked == (distance(t.positions[u], t.positions[v]) <= 2.0)


def test_range_boundary_is_inclusive():
    t = from_explicit([Point(0, 0), Point(1, 0), Point(2.5, 0)], 1.0)
    assert t.neighbors(0) == {1}
    assert t.neighbors(2) == set()


def test_duplicate_positions_are_rejected():
    with pytest.raises(DuplicatePositionError):
        from_explicit([Point(1, 1), Point(2, 2), Point(1, 1)], 1.0)


def test_average_degree_matches_the_edge_corrected_expectation():
    # (n-1) * P(|XY| <= r) for uniform points in a square, r/L = 1/8: ~8.76, not the
    # border-free n*pi*r^2/A ~ 9.8
    degrees = [generate_random(200, 2000, 2000, 250, seed).average_degree() for seed in range(100)]
    a = 250 / 2000
    expected = 199 * (math.pi * a**2 - 8 / 3 * a**3 + a**4 / 2)
    assert expected == pytest.approx(8.76, abs=0.01)
    assert float(np.mean(degrees)) == pytest.approx(expected, abs=0.3)


def test_resolve_labels_and_ids():
    t = FIXTURES["six_node"]()
    assert t.resolve("S") == 0
    assert t.resolve("D") == 4
    assert t.resolve(3) == 3
    assert t.label(5) == "E"
    with pytest.raises(UnknownNodeError):
        t.resolve("Z")
    with pytest.raises(UnknownNodeError):
        t.resolve(6)
    # UnknownNodeError is also a KeyError
    with pytest.raises(KeyError):
        t.check_node(-1)


def test_six_node_adjacency():
    t = FIXTURES["six_node"]()
    named = {t.label(u): {t.label(v) for v in t.neighbors(u)} for u in range(t.n)}
    assert named == {
        "S": {"A", "B"},
        "A": {"S", "B"},
        "B": {"S", "A", "C"},
        "C": {"B", "D", "E"},
        "D": {"C", "E"},
        "E": {"C", "D"},
    }


def test_bfs_oracle():
    t = FIXTURES["six_node"]()
    assert bfs_shortest_hops(t, t.resolve("S"), t.resolve("D")) == 3
    assert bfs_shortest_hops(t, t.resolve("A"), t.resolve("B")) == 1
    split = from_explicit([Point(0, 0), Point(1, 0), Point(10, 0)], 1.5)
    assert bfs_shortest_hops(split, 0, 2) is None


def test_connected_components_are_sorted():
    t = from_explicit([Point(10, 0), Point(0, 0), Point(11, 0), Point(1, 0), Point(50, 50)], 1.5)
    assert connected_components(t) == [{0, 2}, {1, 3}, {4}]


def test_topology_file_reload_is_exact(tmp_path):
    t = generate_random(30, 7.0, 3.0, 1.1, seed=11)
    path = tmp_path / "topo.txt"
    save_topology(t, path)
    loaded = load_topology(path)
    assert loaded.positions == t.positions
    assert loaded.radio_range == t.radio_range
    assert loaded.seed == 11
    assert loaded.adjacency == t.adjacency


def test_topology_file_keeps_labels(data_dir):
    t = load_topology(data_dir / "six_node.txt")
    assert t.labels == ("S", "A", "B", "C", "D", "E")
    assert t.positions == FIXTURES["six_node"]().positions


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 0 0\n1 1 1\n2 2 2\n",
        "2 1.0\n0 0 0\n",
        "2 1.0\n0 0 0\n1 x 1\n",
        "two 1.0\n0 0 0\n1 1 1\n",
    ],
)
def test_malformed_topology_files(text):
    with pytest.raises(FormatError):
        parse_topology(text)
