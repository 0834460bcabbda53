"""
Experiment Driver - paired Physical vs Aligned routing comparison

For every seed: generate a topology, align it to every requested depth, sample
connected pairs, route both directions of each pair under every metric mode and
collect the counts. Seeds are independent, so they may run in a process pool;
per-seed results are re-sorted into config order before pooling.
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.alignment import align_series
from src.config.experiment import ExperimentConfig
from src.config.settings import settings
from src.errors import ConfigError, InvariantViolationError, NoConnectedPairsError
from src.routing import Metric, MetricMode, RouteTrace, default_ttl, greedy_phases_decreasing, route
from src.topology import Topology, bfs_shortest_hops, connected_components, generate_random
from src.utils.logging_helper import get_logger

from .collector import RouteMetricsCollector
from .models import DeltaSummary, ExperimentReport, ModeMetrics, SeedReport
from .pairs import sample_connected_pairs

logger = get_logger(__name__)

SWEEP_PARAMETERS = ("n", "radio_range", "depth")


def _violation(check: str, details: str) -> None:
    logger.log_invariant_violation(check, details)
    if settings.STRICT_INVARIANTS:
        raise InvariantViolationError(f"{check}: {details}")


def _check_trace(t: Topology, m: Metric, trace: RouteTrace, dst: int) -> None:
    if not greedy_phases_decreasing(trace):
        _violation("greedy monotonicity", f"seed={t.seed} {m.label} route {trace.nodes}")
    if m.mode is MetricMode.PHYSICAL and not trace.delivered:
        _violation(
            "physical delivery",
            f"seed={t.seed} {trace.nodes[0]}->{dst} ended {trace.outcome.value} on a connected pair",
        )


def metric_modes(cfg: ExperimentConfig) -> List[Metric]:
    params = cfg.alignment_params
    return [Metric.physical()] + [Metric.aligned(d, params) for d in cfg.depths]


def run_seed(cfg: ExperimentConfig, seed: int) -> SeedReport:
    """One topology of the experiment. Top-level so it can be shipped to a worker process."""
    t = generate_random(cfg.n, cfg.width, cfg.height, cfg.radio_range, seed)
    avg_degree = t.average_degree()
    logger.log_topology_generated(seed, t.n, avg_degree, len(connected_components(t)))

    try:
        pairs = sample_connected_pairs(t, cfg.pairs_per_seed, seed)
    except NoConnectedPairsError as e:
        logger.log_seed_skipped(seed, str(e))
        return SeedReport(seed=seed, skipped=True, skip_reason=str(e), average_degree=avg_degree)

    tables = align_series(t, cfg.max_depth, cfg.alignment_params)
    logger.log_alignment_computed(seed, cfg.max_depth, cfg.alignment_params.describe())
    ttl = default_ttl(t, cfg.ttl_factor)
    optimum: Dict[Tuple[int, int], Optional[int]] = {}
    for a, b in pairs:
        key = (min(a, b), max(a, b))
        if key not in optimum:
            optimum[key] = bfs_shortest_hops(t, a, b)

    modes: List[ModeMetrics] = []
    for m in metric_modes(cfg):
        table = tables[m.table_depth]
        collector = RouteMetricsCollector(mode=m.mode.value, depth=m.depth)
        for a, b in pairs:
            hops = optimum[(min(a, b), max(a, b))]
            forward = route(t, m, table, a, b, ttl)
            backward = route(t, m, table, b, a, ttl)
            for trace, dst in ((forward, b), (backward, a)):
                _check_trace(t, m, trace, dst)
                collector.record_route(trace, hops)
            collector.record_pair(forward, backward)
        metrics = collector.to_metrics()
        logger.log_mode_summary(seed, m.label, metrics.delivered, metrics.routed, metrics.pure_greedy)
        modes.append(metrics)

    report = SeedReport(seed=seed, average_degree=avg_degree, pairs=len(pairs), modes=modes)
    physical = report.mode("physical")
    depth_zero = report.mode("aligned-d0")
    if depth_zero is not None and depth_zero.greedy_completion_ratio != physical.greedy_completion_ratio:
        _violation(
            "depth-0 equivalence",
            f"seed={seed} aligned-d0 {depth_zero.greedy_completion_ratio} != physical {physical.greedy_completion_ratio}",
        )
    return report


def _pool(seed_reports: Sequence[SeedReport]) -> List[ModeMetrics]:
    pooled: Dict[str, RouteMetricsCollector] = {}
    for report in seed_reports:
        for m in report.modes:
            if m.key not in pooled:
                pooled[m.key] = RouteMetricsCollector(mode=m.mode, depth=m.depth)
            pooled[m.key].merge(RouteMetricsCollector.from_metrics(m))
    return [c.to_metrics() for c in pooled.values()]


def _greedy_completion_delta(cfg: ExperimentConfig, seed_reports: Sequence[SeedReport]) -> List[DeltaSummary]:
    """Per-seed (aligned - physical) greedy completion ratio, summarised as mean and population std."""
    summaries = []
    for depth in cfg.depths:
        deltas = []
        for report in seed_reports:
            if report.skipped:
                continue
            physical = report.mode("physical").greedy_completion_ratio
            aligned = report.mode(f"aligned-d{depth}").greedy_completion_ratio
            if physical is not None and aligned is not None:
                deltas.append(aligned - physical)
        if deltas:
            values = np.asarray(deltas, dtype=float)
            summaries.append(
                DeltaSummary(depth=depth, mean=float(values.mean()), std=float(values.std()), seeds=len(deltas))
            )
        else:
            summaries.append(DeltaSummary(depth=depth))
    return summaries


def run_experiment(cfg: ExperimentConfig, workers: Optional[int] = None) -> ExperimentReport:
    """
    Run the full comparison described by cfg.

    The report depends only on cfg: worker count and completion order do not change it.
    Seeds whose topology has no connected pair are skipped and listed in the report.

    Raises:
        InvariantViolationError: a hard check failed and STRICT_INVARIANTS is on
    """
    workers = settings.EXPERIMENT_WORKERS if workers is None else workers
    started = time.perf_counter()

    if workers > 1 and len(cfg.seeds) > 1:
        by_seed: Dict[int, SeedReport] = {}
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(run_seed, cfg, seed): seed for seed in cfg.seeds}
            for future in as_completed(futures):
                by_seed[futures[future]] = future.result()
        seed_reports = [by_seed[seed] for seed in cfg.seeds]
    else:
        seed_reports = [run_seed(cfg, seed) for seed in cfg.seeds]

    ran = [r for r in seed_reports if not r.skipped]
    report = ExperimentReport(
        config=cfg.model_dump(mode="json"),
        alignment_rule=cfg.alignment_params.describe(),
        seeds=seed_reports,
        aggregate=_pool(ran),
        greedy_completion_delta=_greedy_completion_delta(cfg, ran),
    )
    logger.log_experiment_done(len(ran), len(report.skipped_seeds), time.perf_counter() - started)
    return report


def sweep_config(cfg: ExperimentConfig, parameter: str, value: Union[int, float]) -> ExperimentConfig:
    """cfg with one parameter replaced; `depth` compares Physical against that single depth."""
    if parameter not in SWEEP_PARAMETERS:
        raise ConfigError(f"cannot sweep {parameter!r}, choose one of {', '.join(SWEEP_PARAMETERS)}")
    data = cfg.model_dump()
    if parameter == "depth":
        data["depths"] = [int(value)]
    elif parameter == "n":
        data["n"] = int(value)
    else:
        data["radio_range"] = float(value)
    try:
        return ExperimentConfig(**data)
    except ValueError as e:
        raise ConfigError(f"invalid sweep value {parameter}={value}: {e}")


def run_sweep(
    cfg: ExperimentConfig,
    parameter: str,
    values: Sequence[Union[int, float]],
    workers: Optional[int] = None,
) -> List[Tuple[Union[int, float], ExperimentReport]]:
    """One experiment per value of `parameter` (n, radio_range or depth), in the given order."""
    if not values:
        raise ConfigError("sweep needs at least one value")
    results = []
    for value in values:
        logger.info(f"📊 Sweep {parameter}={value}")
        results.append((value, run_experiment(sweep_config(cfg, parameter, value), workers)))
    return results
