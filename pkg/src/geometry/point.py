"""
2-D vector primitives shared by every other package.

Points are immutable value objects; all functions are pure, so they are safe to call
from any number of workers.
"""

import math
from dataclasses import dataclass
from typing import Sequence

from src.errors import EmptySetError, NonFiniteCoordinateError, ZeroVectorError

# Below any meaningful inter-node spacing at simulation scales
DEGENERACY_EPS = 1e-12


@dataclass(frozen=True)
class Point:
    """A location (or a free vector) in the plane, in distance units."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteCoordinateError(f"Non-finite coordinate: ({self.x}, {self.y})")
        # Normalise ints/numpy scalars to plain floats so equality and repr are stable
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, factor: float) -> "Point":
        return Point(self.x * factor, self.y * factor)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def rotate(self, angle: float) -> "Point":
        """Rotate about the origin by `angle` radians (counterclockwise)."""
        c, s = math.cos(angle), math.sin(angle)
        return Point(c * self.x - s * self.y, s * self.x + c * self.y)


ORIGIN = Point(0.0, 0.0)


def distance(a: Point, b: Point) -> float:
    """Euclidean distance |ab|."""
    return math.hypot(a.x - b.x, a.y - b.y)


def distance_sq(a: Point, b: Point) -> float:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)


def unit_vector(start: Point, end: Point) -> Point:
    """
    Unit vector pointing from `start` to `end`.

    Raises:
        ZeroVectorError: the points are closer than DEGENERACY_EPS
    """
    length = distance(start, end)
    if length < DEGENERACY_EPS:
        raise ZeroVectorError(f"No direction from {start} to {end}")
    return Point((end.x - start.x) / length, (end.y - start.y) / length)


def centroid(points: Sequence[Point]) -> Point:
    """
    Componentwise arithmetic mean.

    Uses correctly rounded summation, so the result does not depend on list order.
    """
    if not points:
        raise EmptySetError("Centroid of an empty point set")
    count = len(points)
    return Point(
        math.fsum(p.x for p in points) / count,
        math.fsum(p.y for p in points) / count,
    )


def bearing(start: Point, end: Point) -> float:
    """Angle of the vector start→end in radians, in (-pi, pi]."""
    return math.atan2(end.y - start.y, end.x - start.x)


def cross(o: Point, a: Point, b: Point) -> float:
    """z-component of (a - o) x (b - o); > 0 when o, a, b turn counterclockwise."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True when the open segments p1p2 and q1q2 properly intersect (no shared endpoints,
    no collinear overlap)."""
    d1 = cross(q1, q2, p1)
    d2 = cross(q1, q2, p2)
    d3 = cross(p1, p2, q1)
    d4 = cross(p1, p2, q2)
    return ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4))


def segment_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point:
    """Intersection point of the lines through p1p2 and q1q2 (caller checks they cross)."""
    r = p2 - p1
    s = q2 - q1
    denom = r.x * s.y - r.y * s.x
    t = ((q1.x - p1.x) * s.y - (q1.y - p1.y) * s.x) / denom
    return Point(p1.x + t * r.x, p1.y + t * r.y)

