"""
Simulation API routes

Stateless wrappers over the library: every request carries its whole topology
(or the parameters to generate one), so responses are reproducible.
Handlers are plain `def` so FastAPI runs the CPU-bound work in its threadpool.
"""

import logging
from typing import List, Optional, Sequence

from fastapi import APIRouter

from src.alignment import AlignmentTable, align_all
from src.config.experiment import ExperimentConfig
from src.geometry import Point
from src.harness import ExperimentReport, run_experiment
from src.routing import Metric, MetricMode, route
from src.topology import Topology, bfs_shortest_hops, from_explicit, generate_random

from .models import (
    AlignRequest,
    AlignResponse,
    GenerateRequest,
    HopModel,
    PointModel,
    RouteRequest,
    RouteResponse,
    TopologyRequest,
    TopologyResponse,
)

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api", tags=["simulation"])


def _build(req: TopologyRequest) -> Topology:
    return from_explicit([Point(p.x, p.y) for p in req.positions], req.radio_range, labels=req.labels)


def _points(points: Sequence[Point]) -> List[PointModel]:
    return [PointModel(x=p.x, y=p.y) for p in points]


def _describe(t: Topology) -> TopologyResponse:
    return TopologyResponse(
        n=t.n,
        radio_range=t.radio_range,
        seed=t.seed,
        labels=list(t.labels),
        positions=_points(t.positions),
        adjacency=[sorted(s) for s in t.adjacency],
        planar_adjacency=[sorted(s) for s in t.planar_adjacency],
        average_degree=t.average_degree(),
    )


@router.post("/topology/generate", response_model=TopologyResponse)
def generate_topology(req: GenerateRequest):
    """Random unit-disk topology, identical for identical parameters"""
    t = generate_random(req.n, req.width, req.height, req.radio_range, req.seed)
    logger.info(f"✅ Generated topology n={t.n} seed={req.seed} avg degree {t.average_degree():.2f}")
    return _describe(t)


@router.post("/align", response_model=AlignResponse)
def align(req: AlignRequest):
    t = _build(req)
    params = req.params.to_params()
    table = align_all(t, req.depth, params)
    return AlignResponse(depth=table.depth, rule=params.describe(), coords=_points(table.coords))


@router.post("/route", response_model=RouteResponse)
def route_pair(req: RouteRequest):
    """Route one packet and return the annotated trace"""
    t = _build(req)
    src, dst = t.resolve(req.src), t.resolve(req.dst)
    table: Optional[AlignmentTable] = None
    if req.metric is MetricMode.PHYSICAL:
        metric = Metric.physical()
    else:
        params = req.params.to_params()
        metric = Metric.aligned(req.depth, params)
        table = align_all(t, req.depth, params)
    trace = route(t, metric, table, src, dst, req.ttl)
    return RouteResponse(
        metric=metric.label,
        outcome=trace.outcome.value,
        hops=[
            HopModel(node=t.labels[node], phase=phase.value, metric_distance=d)
            for (node, phase), d in zip(trace.hops, trace.metric_distances)
        ],
        hop_count=trace.hop_count,
        greedy_hops=trace.greedy_hops,
        perimeter_hops=trace.perimeter_hops,
        bfs_hops=bfs_shortest_hops(t, src, dst),
    )


@router.post("/compare", response_model=ExperimentReport)
def compare(cfg: ExperimentConfig):
    """Full comparison run; runs in-process regardless of EXPERIMENT_WORKERS"""
    logger.info(f"📊 Compare requested: n={cfg.n} seeds={len(cfg.seeds)} pairs={cfg.pairs_per_seed}")
    return run_experiment(cfg, workers=1)
