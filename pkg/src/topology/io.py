"""
Topology file format (plain text, line oriented):

    n radio_range
    id x y          (n lines)

`id` is the node's label; generated topologies use 0..n-1. Lines starting with '#' are
comments (the writer records the seed there). Adjacency is never serialized: it is
re-derived from positions on load. Floats are written with repr() so a reload is exact
and two writes of the same topology are byte-identical.
"""

from pathlib import Path
from typing import List, Union

from src.errors import FormatError
from src.geometry import Point

from .topology import Topology, from_explicit


def format_topology(t: Topology) -> str:
    lines: List[str] = []
    if t.seed is not None:
        lines.append(f"# seed {t.seed}")
    lines.append(f"{t.n} {t.radio_range!r}")
    for label, p in zip(t.labels, t.positions):
        lines.append(f"{label} {p.x!r} {p.y!r}")
    return "\n".join(lines) + "\n"


def parse_topology(text: str) -> Topology:
    seed = None
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "seed":
                try:
                    seed = int(parts[1])
                except ValueError:
                    raise FormatError(f"Bad seed comment: {raw!r}")
            continue
        rows.append(line.split())

    if not rows:
        raise FormatError("Empty topology file")
    header = rows[0]
    if len(header) != 2:
        raise FormatError(f"Header must be 'n radio_range', got {' '.join(header)!r}")
    try:
        n = int(header[0])
        radio_range = float(header[1])
    except ValueError:
        raise FormatError(f"Header must be 'n radio_range', got {' '.join(header)!r}")
    body = rows[1:]
    if len(body) != n:
        raise FormatError(f"Header declares {n} nodes but {len(body)} node lines follow")

    labels, positions = [], []
    for row in body:
        if len(row) != 3:
            raise FormatError(f"Node line must be 'id x y', got {' '.join(row)!r}")
        try:
            positions.append(Point(float(row[1]), float(row[2])))
        except ValueError:
            raise FormatError(f"Bad coordinates in node line {' '.join(row)!r}")
        labels.append(row[0])

    t = from_explicit(positions, radio_range, labels=labels)
    if seed is None:
        return t
    return Topology(t.positions, t.radio_range, seed=seed, labels=t.labels)


def save_topology(t: Topology, path: Union[str, Path]) -> None:
    Path(path).write_text(format_topology(t))


def load_topology(path: Union[str, Path]) -> Topology:
    return parse_topology(Path(path).read_text())
