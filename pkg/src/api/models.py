"""Request / response models for the simulation API"""

from typing import List, Optional

from pydantic import BaseModel, Field

from src.alignment import AlignmentParams, DepthAnchor, DeviationRule, DisplacementRule
from src.routing import MetricMode


class PointModel(BaseModel):
    x: float
    y: float


class AlignmentParamsModel(BaseModel):
    deviation_rule: DeviationRule = DeviationRule.AS_WRITTEN
    displacement_rule: DisplacementRule = DisplacementRule.OFFSET_FROM_PHYSICAL
    depth_anchor: DepthAnchor = DepthAnchor.PREVIOUS_DEPTH

    def to_params(self) -> AlignmentParams:
        return AlignmentParams(self.deviation_rule, self.displacement_rule, self.depth_anchor)


class GenerateRequest(BaseModel):
    n: int = Field(..., ge=2, le=5000, description="Nodes to place")
    width: float = Field(..., gt=0)
    height: float = Field(..., gt=0)
    radio_range: float = Field(..., gt=0)
    seed: int = Field(default=0, description="PCG64 seed")


class TopologyRequest(BaseModel):
    """An explicit topology: positions plus radio range, optional labels."""

    positions: List[PointModel] = Field(..., min_length=2)
    radio_range: float = Field(..., gt=0)
    labels: Optional[List[str]] = None


class TopologyResponse(BaseModel):
    n: int
    radio_range: float
    seed: Optional[int] = None
    labels: List[str]
    positions: List[PointModel]
    adjacency: List[List[int]] = Field(description="Sorted neighbour ids per node")
    planar_adjacency: List[List[int]] = Field(description="Gabriel subgraph neighbour ids per node")
    average_degree: float


class AlignRequest(TopologyRequest):
    depth: int = Field(default=1, ge=0, le=50)
    params: AlignmentParamsModel = Field(default_factory=AlignmentParamsModel)


class AlignResponse(BaseModel):
    depth: int
    rule: str
    coords: List[PointModel]


class RouteRequest(TopologyRequest):
    src: str = Field(..., description="Source label or id")
    dst: str = Field(..., description="Destination label or id")
    metric: MetricMode = MetricMode.PHYSICAL
    depth: int = Field(default=1, ge=0, le=50, description="Alignment depth for the aligned metric")
    params: AlignmentParamsModel = Field(default_factory=AlignmentParamsModel)
    ttl: Optional[int] = Field(default=None, ge=1)


class HopModel(BaseModel):
    node: str
    phase: str
    metric_distance: float


class RouteResponse(BaseModel):
    metric: str
    outcome: str
    hops: List[HopModel]
    hop_count: int
    greedy_hops: int
    perimeter_hops: int
    bfs_hops: Optional[int] = Field(default=None, description="Shortest-path hop count, None when disconnected")
