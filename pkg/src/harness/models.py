"""
Experiment Report Models - Pydantic

Per-mode routing metrics, per-seed breakdowns and the aggregated report.
Counts and raw sums are stored alongside every ratio so seeds can be pooled.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class ModeMetrics(BaseModel):
    """Routing outcome statistics for one metric mode (physical, or aligned at one depth)"""

    mode: str = Field(description="'physical' or 'aligned'")
    depth: int = Field(default=0, ge=0, description="Alignment depth (0 for physical)")

    # Raw counts / sums
    routed: int = Field(default=0, ge=0, description="Routes attempted (both directions of every pair)")
    delivered: int = Field(default=0, ge=0, description="Routes that reached the destination")
    pure_greedy: int = Field(default=0, ge=0, description="Delivered routes with zero perimeter hops")
    stretch_sum: float = Field(default=0.0, ge=0.0, description="Sum of hops / BFS hops over delivered routes")
    greedy_hop_fraction_sum: float = Field(default=0.0, ge=0.0, description="Sum of greedy/total hops over delivered routes")
    pairs: int = Field(default=0, ge=0, description="Pairs routed in both directions")
    asymmetric_pairs: int = Field(default=0, ge=0, description="Pairs where exactly one direction needed perimeter mode")

    # Derived (None when nothing was delivered)
    delivery_rate: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    greedy_completion_ratio: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    mean_stretch: Optional[float] = Field(default=None, ge=1.0)
    mean_greedy_hop_fraction: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    asymmetry_rate: Optional[float] = Field(default=None, ge=0.0, le=1.0)

    @property
    def key(self) -> str:
        return self.mode if self.mode == "physical" else f"{self.mode}-d{self.depth}"


class SeedReport(BaseModel):
    """One topology's results"""

    seed: int
    skipped: bool = False
    skip_reason: Optional[str] = None
    average_degree: float = Field(default=0.0, ge=0.0)
    pairs: int = Field(default=0, ge=0)
    modes: List[ModeMetrics] = Field(default_factory=list)

    def mode(self, key: str) -> Optional[ModeMetrics]:
        return next((m for m in self.modes if m.key == key), None)


class DeltaSummary(BaseModel):
    """Aligned-minus-physical greedy completion ratio across seeds"""

    depth: int = Field(ge=0)
    mean: Optional[float] = None
    std: Optional[float] = Field(default=None, ge=0.0, description="Population std across seeds")
    seeds: int = Field(default=0, ge=0, description="Seeds contributing a value")


class ExperimentReport(BaseModel):
    """Complete comparison run"""

    config: Dict[str, Any] = Field(description="The ExperimentConfig the run was produced from")
    alignment_rule: str = Field(description="Deviation + displacement + anchor rule used for alignment")
    seeds: List[SeedReport] = Field(default_factory=list)
    aggregate: List[ModeMetrics] = Field(default_factory=list, description="Pooled over all run seeds")
    greedy_completion_delta: List[DeltaSummary] = Field(default_factory=list)

    @property
    def skipped_seeds(self) -> List[int]:
        return [s.seed for s in self.seeds if s.skipped]

    def mode(self, key: str) -> Optional[ModeMetrics]:
        return next((m for m in self.aggregate if m.key == key), None)
