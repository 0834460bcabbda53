"""
End-to-end packet routing: greedy while possible, GPSR perimeter recovery on voids.

route() is a pure function of immutable inputs, so many (src, dst) pairs can be routed
concurrently over one shared topology and alignment table.
"""

import logging
import math
from typing import Optional

from src.alignment import AlignmentTable, physical_table
from src.config.settings import settings
from src.errors import RoutingError, SameSrcDstError
from src.topology import NodeId, Topology

from .greedy import check_table, greedy_step, metric_distance
from .models import Metric, MetricMode, Outcome, Packet, Phase, RouteTrace
from .perimeter import perimeter_step

logger = logging.getLogger(__name__)


def default_ttl(t: Topology, factor: Optional[float] = None) -> int:
    factor = settings.DEFAULT_TTL_FACTOR if factor is None else factor
    return max(1, math.ceil(factor * t.n))


def route(
    t: Topology,
    m: Metric,
    table: Optional[AlignmentTable],
    src: NodeId,
    dst: NodeId,
    ttl: Optional[int] = None,
) -> RouteTrace:
    """
    Route one packet from src to dst.

    The perimeter phase is left as soon as a node's metric distance is strictly below
    the distance at which the packet entered it.

    Raises:
        UnknownNodeError: src or dst not in t
        SameSrcDstError: src == dst
        MissingAlignmentError: table depth does not match the metric
    """
    t.check_node(src)
    t.check_node(dst)
    if src == dst:
        raise SameSrcDstError(f"Source and destination are both {t.label(src)}")
    if table is None:
        if m.mode is not MetricMode.PHYSICAL:
            raise RoutingError(f"Metric {m.label} needs an alignment table")
        table = physical_table(t)
    check_table(m, table)
    ttl = default_ttl(t) if ttl is None else ttl
    if ttl < 1:
        raise RoutingError(f"ttl must be >= 1, got {ttl}")

    dst_physical = t.positions[dst]
    pkt = Packet(src=src, dst=dst, dst_physical=dst_physical, ttl=ttl)
    current = src
    hops = [(src, Phase.GREEDY)]
    distances = [metric_distance(m, table, src, dst_physical, dst)]

    while True:
        if current == dst:
            outcome = Outcome.DELIVERED
            break
        if pkt.ttl == 0:
            outcome = Outcome.DROPPED_TTL
            break

        here = distances[-1]
        if pkt.mode is Phase.PERIMETER and here < pkt.entry_distance:
            pkt.resume_greedy()

        nxt: Optional[NodeId] = None
        if pkt.mode is Phase.GREEDY:
            nxt = greedy_step(t, m, table, current, dst)
            if nxt is None:
                pkt.enter_perimeter(here, t.positions[current])
        if pkt.mode is Phase.PERIMETER:
            nxt = perimeter_step(t, pkt, current)
            if nxt is None:
                outcome = Outcome.DEAD_END
                break

        hops.append((nxt, pkt.mode))
        distances.append(metric_distance(m, table, nxt, dst_physical, dst))
        pkt.previous = current
        pkt.ttl -= 1
        current = nxt

    trace = RouteTrace(hops=hops, outcome=outcome, metric_distances=distances)
    logger.debug(
        f"🔎 {m.label} {t.label(src)}->{t.label(dst)}: {outcome.value} "
        f"({trace.greedy_hops} greedy, {trace.perimeter_hops} perimeter)"
    )
    return trace


def greedy_phases_decreasing(trace: RouteTrace) -> bool:
    """Within every greedy run the metric distance strictly decreases hop over hop."""
    for run in trace.greedy_runs():
        values = [trace.metric_distances[i] for i in run]
        if any(b >= a for a, b in zip(values, values[1:])):
            return False
    return True
