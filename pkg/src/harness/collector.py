"""
Route Metrics Collector - accumulates routing outcomes per metric mode

Only sums and counts are kept, so collectors from different seeds (or workers)
merge in any order to the same totals.
"""

from dataclasses import dataclass
from typing import Optional

from src.routing import RouteTrace

from .asymmetry import is_asymmetric
from .models import ModeMetrics


@dataclass
class RouteMetricsCollector:
    """Running totals for one metric mode"""

    mode: str
    depth: int = 0
    routed: int = 0
    delivered: int = 0
    pure_greedy: int = 0
    stretch_sum: float = 0.0
    greedy_hop_fraction_sum: float = 0.0
    pairs: int = 0
    asymmetric_pairs: int = 0

    def record_route(self, trace: RouteTrace, bfs_hops: Optional[int]) -> None:
        """Record one routed packet; stretch needs the BFS optimum of the pair."""
        self.routed += 1
        if not trace.delivered:
            return
        self.delivered += 1
        if trace.pure_greedy:
            self.pure_greedy += 1
        if bfs_hops:
            self.stretch_sum += trace.hop_count / bfs_hops
        self.greedy_hop_fraction_sum += trace.greedy_hops / trace.hop_count

    def record_pair(self, forward: RouteTrace, backward: RouteTrace) -> None:
        self.pairs += 1
        if is_asymmetric(forward, backward):
            self.asymmetric_pairs += 1

    def merge(self, other: "RouteMetricsCollector") -> None:
        self.routed += other.routed
        self.delivered += other.delivered
        self.pure_greedy += other.pure_greedy
        self.stretch_sum += other.stretch_sum
        self.greedy_hop_fraction_sum += other.greedy_hop_fraction_sum
        self.pairs += other.pairs
        self.asymmetric_pairs += other.asymmetric_pairs

    @classmethod
    def from_metrics(cls, m: ModeMetrics) -> "RouteMetricsCollector":
        return cls(
            mode=m.mode,
            depth=m.depth,
            routed=m.routed,
            delivered=m.delivered,
            pure_greedy=m.pure_greedy,
            stretch_sum=m.stretch_sum,
            greedy_hop_fraction_sum=m.greedy_hop_fraction_sum,
            pairs=m.pairs,
            asymmetric_pairs=m.asymmetric_pairs,
        )

    def to_metrics(self) -> ModeMetrics:
        delivered = self.delivered or None
        return ModeMetrics(
            mode=self.mode,
            depth=self.depth,
            routed=self.routed,
            delivered=self.delivered,
            pure_greedy=self.pure_greedy,
            stretch_sum=self.stretch_sum,
            greedy_hop_fraction_sum=self.greedy_hop_fraction_sum,
            pairs=self.pairs,
            asymmetric_pairs=self.asymmetric_pairs,
            delivery_rate=self.delivered / self.routed if self.routed else None,
            greedy_completion_ratio=self.pure_greedy / delivered if delivered else None,
            # max() absorbs float rounding in sums of exact-1.0 stretches
            mean_stretch=max(1.0, self.stretch_sum / delivered) if delivered else None,
            mean_greedy_hop_fraction=min(1.0, self.greedy_hop_fraction_sum / delivered) if delivered else None,
            asymmetry_rate=self.asymmetric_pairs / self.pairs if self.pairs else None,
        )
