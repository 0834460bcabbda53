"""
Exception hierarchy for the routing simulator.

Every failure the simulator raises on purpose derives from SimulationError, so the
entry points (CLI, HTTP app) can tell "your input is wrong" apart from a real crash.
"""


class SimulationError(Exception):
    """Base class for all simulator errors."""


# === GEOMETRY ===

class GeometryError(SimulationError):
    """Invalid geometric input."""


class NonFiniteCoordinateError(GeometryError, ValueError):
    """A coordinate was NaN or infinite."""


class ZeroVectorError(GeometryError):
    """Direction requested between two (numerically) coincident points."""


class EmptySetError(GeometryError):
    """Centroid of an empty point list."""


# === TOPOLOGY ===

class TopologyError(SimulationError):
    """Invalid topology construction or query."""


class InvalidParamsError(TopologyError, ValueError):
    """Generator parameters out of range (n < 2, non-positive dimensions)."""


class DuplicatePositionError(TopologyError):
    """Two nodes share a position."""


class UnknownNodeError(TopologyError, KeyError):
    """Node id (or label) not present in the topology."""


class FormatError(SimulationError):
    """A topology, alignment table or trace file could not be parsed."""


# === ALIGNMENT ===

class AlignmentError(SimulationError):
    """Alignment statistic undefined for a node."""


class IsolatedNodeError(AlignmentError):
    """The node has no neighbours, so Eqs. 1-3 are undefined for it."""


# === ROUTING ===

class RoutingError(SimulationError):
    """Invalid routing request."""


class MissingAlignmentError(RoutingError):
    """The alignment table does not match the metric's depth."""


class SameSrcDstError(RoutingError):
    """Route requested from a node to itself."""


# === HARNESS ===

class HarnessError(SimulationError):
    """Experiment driver failures."""


class NoConnectedPairsError(HarnessError):
    """A topology has no connected (src, dst) pair to sample."""


class ConfigError(HarnessError):
    """Experiment configuration could not be loaded or validated."""


class InvariantViolationError(HarnessError):
    """A property that must always hold was observed to fail."""
