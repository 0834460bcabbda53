"""Routing data types: the metric, the in-flight packet state and the recorded trace."""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from src.alignment import DEFAULT_PARAMS, AlignmentParams
from src.geometry import Point


class MetricMode(str, Enum):
    PHYSICAL = "physical"
    ALIGNED = "aligned"


class Phase(str, Enum):
    GREEDY = "greedy"
    PERIMETER = "perimeter"


class Outcome(str, Enum):
    DELIVERED = "Delivered"
    DROPPED_TTL = "DroppedTtl"
    DEAD_END = "DeadEnd"


@dataclass(frozen=True)
class Metric:
    """Which coordinates greedy decisions compare. Perimeter mode always uses physical ones."""

    mode: MetricMode = MetricMode.PHYSICAL
    depth: int = 0
    params: AlignmentParams = DEFAULT_PARAMS

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError(f"Metric depth must be >= 0, got {self.depth}")
        if self.mode is MetricMode.PHYSICAL and self.depth != 0:
            raise ValueError("The physical metric has no alignment depth")

    @classmethod
    def physical(cls) -> "Metric":
        return cls(MetricMode.PHYSICAL)

    @classmethod
    def aligned(cls, depth: int, params: AlignmentParams = DEFAULT_PARAMS) -> "Metric":
        return cls(MetricMode.ALIGNED, depth, params)

    @property
    def table_depth(self) -> int:
        """Depth of the AlignmentTable this metric reads (0 for physical)."""
        return self.depth

    @property
    def label(self) -> str:
        if self.mode is MetricMode.PHYSICAL:
            return "physical"
        return f"aligned-d{self.depth}"


@dataclass
class Packet:
    """GPSR header state carried hop by hop."""

    src: int
    dst: int
    dst_physical: Point
    ttl: int
    mode: Phase = Phase.GREEDY
    # set while in perimeter mode
    entry_distance: Optional[float] = None
    entry_point: Optional[Point] = None
    face_point: Optional[Point] = None
    first_perimeter_edge: Optional[Tuple[int, int]] = None
    previous: Optional[int] = None

    def enter_perimeter(self, distance_here: float, position_here: Point) -> None:
        self.mode = Phase.PERIMETER
        self.entry_distance = distance_here
        self.entry_point = position_here
        self.face_point = position_here
        self.first_perimeter_edge = None

    def resume_greedy(self) -> None:
        self.mode = Phase.GREEDY
        self.entry_distance = None
        self.entry_point = None
        self.face_point = None
        self.first_perimeter_edge = None


@dataclass
class RouteTrace:
    """Hops in order; hops[0] is the source, every later hop is tagged with the phase that chose it."""

    hops: List[Tuple[int, Phase]]
    outcome: Outcome
    # metric distance to the destination at each hop
    metric_distances: List[float] = field(default_factory=list)

    @property
    def nodes(self) -> List[int]:
        return [node for node, _ in self.hops]

    @property
    def hop_count(self) -> int:
        return len(self.hops) - 1

    @property
    def greedy_hops(self) -> int:
        return sum(1 for _, phase in self.hops[1:] if phase is Phase.GREEDY)

    @property
    def perimeter_hops(self) -> int:
        return sum(1 for _, phase in self.hops[1:] if phase is Phase.PERIMETER)

    @property
    def delivered(self) -> bool:
        return self.outcome is Outcome.DELIVERED

    @property
    def pure_greedy(self) -> bool:
        return self.perimeter_hops == 0

    def greedy_runs(self) -> List[List[int]]:
        """Indices of consecutive greedy-chosen hops, each run prefixed by the hop it left from."""
        runs: List[List[int]] = []
        current: List[int] = []
        for i in range(1, len(self.hops)):
            if self.hops[i][1] is Phase.GREEDY:
                if not current:
                    current = [i - 1]
                current.append(i)
            elif current:
                runs.append(current)
                current = []
        if current:
            runs.append(current)
        return runs
