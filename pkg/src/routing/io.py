"""
Trace dump (plain text):

    hop_index node_id phase      (one line per hop, hop 0 is the source)
    outcome <Delivered|DroppedTtl|DeadEnd>
"""

from typing import List, Sequence, Tuple

from src.errors import FormatError

from .models import Outcome, Phase, RouteTrace


def format_trace(trace: RouteTrace, labels: Sequence[str]) -> str:
    lines = [f"{i} {labels[node]} {phase.value}" for i, (node, phase) in enumerate(trace.hops)]
    lines.append(f"outcome {trace.outcome.value}")
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> Tuple[List[Tuple[str, Phase]], Outcome]:
    """Inverse of format_trace, returning hop labels rather than ids."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or rows[-1][0] != "outcome" or len(rows[-1]) != 2:
        raise FormatError("Trace must end with an 'outcome' line")
    try:
        outcome = Outcome(rows[-1][1])
        hops = []
        for expected, row in enumerate(rows[:-1]):
            if len(row) != 3 or int(row[0]) != expected:
                raise FormatError(f"Bad hop line: {' '.join(row)!r}")
            hops.append((row[1], Phase(row[2])))
    except ValueError as e:
        raise FormatError(f"Bad trace: {e}")
    return hops, outcome
