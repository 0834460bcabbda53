"""Geometry primitives: Point and pure vector functions."""

from .point import (
    DEGENERACY_EPS,
    ORIGIN,
    Point,
    bearing,
    centroid,
    cross,
    distance,
    distance_sq,
    midpoint,
    segment_intersection,
    segments_cross,
    unit_vector,
)

__all__ = [
    "DEGENERACY_EPS",
    "ORIGIN",
    "Point",
    "bearing",
    "centroid",
    "cross",
    "distance",
    "distance_sq",
    "midpoint",
    "segment_intersection",
    "segments_cross",
    "unit_vector",
]
