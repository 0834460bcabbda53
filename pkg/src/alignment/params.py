"""Alternative readings of the alignment formulas that the harness can switch between."""

from dataclasses import dataclass
from enum import Enum


class DeviationRule(str, Enum):
    # sqrt(sum of squared deviations) / N, the deviation formula taken literally
    AS_WRITTEN = "as_written"
    # population standard deviation sqrt(sum / N)
    SAMPLE_STD = "sample_std"


class DisplacementRule(str, Enum):
    # X' = X + sigma * unit(X -> X_a)
    OFFSET_FROM_PHYSICAL = "offset_from_physical"
    # X' = sigma * unit(origin -> X_a), displacement taken literally; fidelity runs only
    LITERAL_EQ4 = "literal_eq4"


class DepthAnchor(str, Enum):
    # depth k displaces the node's own depth-(k-1) coordinate
    PREVIOUS_DEPTH = "previous_depth"
    # depth k always displaces the physical position
    PHYSICAL = "physical"


@dataclass(frozen=True)
class AlignmentParams:
    deviation_rule: DeviationRule = DeviationRule.AS_WRITTEN
    displacement_rule: DisplacementRule = DisplacementRule.OFFSET_FROM_PHYSICAL
    depth_anchor: DepthAnchor = DepthAnchor.PREVIOUS_DEPTH

    def describe(self) -> str:
        return f"{self.deviation_rule.value}+{self.displacement_rule.value}+{self.depth_anchor.value}"


DEFAULT_PARAMS = AlignmentParams()
