"""Comparison harness: pair sampling, asymmetry, metrics, invariants and determinism."""

import pytest

from src.alignment import physical_table
from src.config.experiment import ExperimentConfig, load_config
from src.errors import ConfigError, NoConnectedPairsError
from src.geometry import Point
from src.harness import (
    RouteMetricsCollector,
    format_csv,
    format_sweep_csv,
    format_table,
    is_asymmetric,
    measure_asymmetry,
    run_experiment,
    run_sweep,
    sample_connected_pairs,
    sweep_config,
)
from src.routing import Metric, route
from src.topology import FIXTURES, connected_components, from_explicit, generate_random


def small_config(**overrides) -> ExperimentConfig:
    base = dict(n=60, width=600, height=600, radio_range=150, seeds=[1, 2, 3], pairs_per_seed=40, depths=[0, 1, 2])
    base.update(overrides)
    return ExperimentConfig(**base)


# --- pairs -----------------------------------------------------------------

def test_pairs_are_distinct_and_connected():
    t = generate_random(80, 1000, 1000, 150, seed=4)
    component_of = {}
    for i, c in enumerate(connected_components(t)):
        for node in c:
            component_of[node] = i
    pairs = sample_connected_pairs(t, 300, seed=4)
    assert len(pairs) == 300
    for a, b in pairs:
        assert a != b
        assert component_of[a] == component_of[b]


def test_pair_sampling_is_seeded():
    t = generate_random(80, 1000, 1000, 150, seed=4)
    assert sample_connected_pairs(t, 50, seed=9) == sample_connected_pairs(t, 50, seed=9)
    assert sample_connected_pairs(t, 50, seed=9) != sample_connected_pairs(t, 50, seed=10)


def test_pairs_are_weighted_by_component_pair_count():
    # a 4-node clique (12 ordered pairs) and an edge (2 ordered pairs)
    t = from_explicit([Point(0, 0), Point(0.5, 0), Point(0, 0.5), Point(0.5, 0.5), Point(10, 0), Point(10.5, 0)], 1.0)
    pairs = sample_connected_pairs(t, 7000, seed=1)
    share = sum(1 for a, _ in pairs if a >= 4) / len(pairs)
    assert share == pytest.approx(2 / 14, abs=0.02)


def test_no_connected_pair_raises():
    t = from_explicit([Point(0, 0), Point(5, 5), Point(9, 0)], 1.0)
    with pytest.raises(NoConnectedPairsError):
        sample_connected_pairs(t, 10, seed=0)


# --- asymmetry ---------------------------------------------------------------

def test_six_node_physical_pair_is_asymmetric():
    t = FIXTURES["six_node_table"]()
    pair = [(t.resolve("S"), t.resolve("D"))]
    assert measure_asymmetry(t, Metric.physical(), physical_table(t), pair) == 1.0


def test_void_corridor_is_asymmetric():
    t = FIXTURES["void_corridor"]()
    pair = [(t.resolve("S"), t.resolve("D"))]
    assert measure_asymmetry(t, Metric.physical(), None, pair) == 1.0


def test_symmetric_corridor_is_not_asymmetric():
    t = FIXTURES["symmetric_corridor"]()
    pair = [(t.resolve("S"), t.resolve("D"))]
    assert measure_asymmetry(t, Metric.physical(), None, pair) == 0.0


def test_complete_graph_has_no_asymmetry():
    t = generate_random(15, 10, 10, 100, seed=3)
    pairs = [(a, b) for a in range(t.n) for b in range(t.n) if a < b]
    assert measure_asymmetry(t, Metric.physical(), None, pairs) == 0.0
    assert measure_asymmetry(t, Metric.physical(), None, []) == 0.0


# --- collector -----------------------------------------------------------------

def test_collector_averages_over_delivered_routes():
    t = FIXTURES["six_node_table"]()
    s, d = t.resolve("S"), t.resolve("D")
    forward = route(t, Metric.physical(), None, s, d)
    backward = route(t, Metric.physical(), None, d, s)
    dropped = route(t, Metric.physical(), None, s, d, ttl=1)

    c = RouteMetricsCollector(mode="physical")
    c.record_route(forward, 3)
    c.record_route(backward, 3)
    c.record_route(dropped, 3)
    c.record_pair(forward, backward)
    m = c.to_metrics()

    assert (m.routed, m.delivered, m.pure_greedy) == (3, 2, 1)
    assert m.delivery_rate == pytest.approx(2 / 3)
    assert m.greedy_completion_ratio == 0.5
    # 5 hops vs 3, and 3 vs 3
    assert m.mean_stretch == pytest.approx((5 / 3 + 1) / 2)
    assert m.mean_greedy_hop_fraction == pytest.approx((2 / 5 + 1) / 2)
    assert m.asymmetry_rate == 1.0


def test_collector_counts_pairs_the_way_is_asymmetric_does():
    pairs = []
    for name in ("six_node_table", "void_corridor", "symmetric_corridor"):
        t = FIXTURES[name]()
        s, d = t.resolve("S"), t.resolve("D")
        pairs.append((route(t, Metric.physical(), None, s, d), route(t, Metric.physical(), None, d, s)))
    c = RouteMetricsCollector(mode="physical")
    for forward, backward in pairs:
        c.record_pair(forward, backward)
    assert c.pairs == 3
    assert c.asymmetric_pairs == sum(is_asymmetric(f, b) for f, b in pairs) == 2


def test_collectors_merge_to_the_same_totals():
    t = FIXTURES["void_corridor"]()
    s, d = t.resolve("S"), t.resolve("D")
    traces = [route(t, Metric.physical(), None, s, d), route(t, Metric.physical(), None, d, s)]
    whole = RouteMetricsCollector(mode="physical")
    left, right = RouteMetricsCollector(mode="physical"), RouteMetricsCollector(mode="physical")
    for trace in traces:
        whole.record_route(trace, 6)
    left.record_route(traces[0], 6)
    right.record_route(traces[1], 6)
    right.merge(left)
    assert right.to_metrics() == whole.to_metrics()


# --- experiment ----------------------------------------------------------------

def test_range_beyond_the_diagonal_is_all_greedy():
    report = run_experiment(small_config(radio_range=900, pairs_per_seed=20))
    for m in report.aggregate:
        assert m.delivery_rate == 1.0
        assert m.greedy_completion_ratio == 1.0
        assert m.mean_stretch == 1.0
        assert m.asymmetry_rate == 0.0


def test_experiment_reports_every_mode_and_the_delta():
    report = run_experiment(small_config())
    assert [m.key for m in report.aggregate] == ["physical", "aligned-d0", "aligned-d1", "aligned-d2"]
    physical = report.mode("physical")
    assert physical.delivery_rate == 1.0
    assert physical.routed == 2 * 40 * 3
    assert report.mode("aligned-d0").greedy_completion_ratio == physical.greedy_completion_ratio
    for m in report.aggregate:
        assert m.mean_stretch >= 1.0
        assert 0.0 <= m.greedy_completion_ratio <= 1.0
    assert [d.depth for d in report.greedy_completion_delta] == [0, 1, 2]
    assert report.greedy_completion_delta[0].mean == 0.0
    for seed_report in report.seeds:
        assert seed_report.mode("physical").delivery_rate == 1.0


def test_seeds_without_connected_pairs_are_skipped_and_reported():
    report = run_experiment(small_config(n=2, width=1000, height=1000, radio_range=1, seeds=[1, 2]))
    assert report.skipped_seeds == [1, 2]
    assert report.aggregate == []
    csv_text = format_csv(report)
    assert "1,none,0,skipped,1" in csv_text.splitlines()
    assert "skipped seeds" in format_table(report)


def test_report_does_not_depend_on_worker_count():
    cfg = small_config(seeds=[5, 6, 7, 8])
    assert format_csv(run_experiment(cfg, workers=1)) == format_csv(run_experiment(cfg, workers=2))


def test_csv_layout():
    text = format_csv(run_experiment(small_config(seeds=[1], depths=[1])))
    lines = text.splitlines()
    assert lines[0] == "seed,mode,depth,metric,value"
    assert "all,physical,0,delivery_rate,1" in lines
    assert lines[-2].startswith("all,aligned,1,delta_greedy_completion_mean,")
    assert lines[-1].startswith("all,aligned,1,delta_greedy_completion_std,")
    assert all(len(line.split(",")) == 5 for line in lines)


def test_sweep_over_depth():
    results = run_sweep(small_config(seeds=[1], depths=[1]), "depth", [1, 2])
    assert [value for value, _ in results] == [1, 2]
    assert results[1][1].mode("aligned-d2") is not None
    text = format_sweep_csv("depth", results)
    assert text.splitlines()[0] == "depth,seed,mode,depth,metric,value"
    assert text.splitlines()[1].startswith("1,1,")


def test_sweep_rejects_unknown_parameters():
    with pytest.raises(ConfigError):
        sweep_config(small_config(), "pairs_per_seed", 10)
    with pytest.raises(ConfigError):
        sweep_config(small_config(), "n", 1)


def test_reference_scale_run_is_byte_identical(data_dir):
    cfg = load_config(data_dir / "reference_scale.cfg")
    assert (cfg.n, len(cfg.seeds), cfg.pairs_per_seed) == (200, 20, 500)
    first = run_experiment(cfg)
    second = run_experiment(cfg)
    assert format_csv(first) == format_csv(second)

    physical = first.mode("physical")
    assert physical.delivery_rate == 1.0
    assert first.mode("aligned-d0").greedy_completion_ratio == physical.greedy_completion_ratio
    for key in ("aligned-d1", "aligned-d2"):
        m = first.mode(key)
        assert m.greedy_completion_ratio is not None
        assert m.mean_stretch >= 1.0
    deltas = {d.depth: d for d in first.greedy_completion_delta}
    assert deltas[1].seeds == 20 and deltas[1].std is not None
