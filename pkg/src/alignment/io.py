"""
Alignment table dump (plain text):

    depth
    id x' y'        (one line per node)
"""

from typing import List, Sequence, Tuple

from src.errors import FormatError
from src.geometry import Point

from .aligner import AlignmentTable


def format_table(table: AlignmentTable, labels: Sequence[str]) -> str:
    lines = [str(table.depth)]
    lines.extend(f"{label} {p.x!r} {p.y!r}" for label, p in zip(labels, table.coords))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> Tuple[AlignmentTable, List[str]]:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 1:
        raise FormatError("Alignment table must start with a depth line")
    try:
        depth = int(rows[0][0])
    except ValueError:
        raise FormatError(f"Bad depth line: {rows[0][0]!r}")

    labels, coords = [], []
    for row in rows[1:]:
        if len(row) != 3:
            raise FormatError(f"Table line must be 'id x y', got {' '.join(row)!r}")
        try:
            coords.append(Point(float(row[1]), float(row[2])))
        except ValueError:
            raise FormatError(f"Bad coordinates in {' '.join(row)!r}")
        labels.append(row[0])
    return AlignmentTable(depth=depth, coords=tuple(coords)), labels

