"""
Report rendering: line-per-record CSV and a human-readable summary table.

CSV schema: `seed,mode,depth,metric,value` (sweeps prepend the swept parameter).
Rows come per seed, then pooled rows with seed `all`, then the aligned-minus-physical
greedy completion delta rows. Floats use `.10g` so the bytes are stable across runs.
"""

import csv
import io
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .models import ExperimentReport, ModeMetrics

CSV_HEADER = ["seed", "mode", "depth", "metric", "value"]

# Per-mode metrics in CSV order
MODE_FIELDS = (
    "routed",
    "delivered",
    "pure_greedy",
    "delivery_rate",
    "greedy_completion_ratio",
    "mean_stretch",
    "mean_greedy_hop_fraction",
    "asymmetry_rate",
)

Number = Union[int, float, None]


def format_value(value: Number) -> str:
    if value is None:
        return "NA"
    if isinstance(value, int):
        return str(value)
    return format(value, ".10g")


def _mode_rows(seed: str, m: ModeMetrics) -> Iterator[List[str]]:
    for name in MODE_FIELDS:
        yield [seed, m.mode, str(m.depth), name, format_value(getattr(m, name))]


def report_rows(report: ExperimentReport) -> Iterator[List[str]]:
    for s in report.seeds:
        seed = str(s.seed)
        if s.skipped:
            yield [seed, "none", "0", "skipped", "1"]
            continue
        yield [seed, "topology", "0", "average_degree", format_value(s.average_degree)]
        for m in s.modes:
            yield from _mode_rows(seed, m)
    for m in report.aggregate:
        yield from _mode_rows("all", m)
    for d in report.greedy_completion_delta:
        yield ["all", "aligned", str(d.depth), "delta_greedy_completion_mean", format_value(d.mean)]
        yield ["all", "aligned", str(d.depth), "delta_greedy_completion_std", format_value(d.std)]


def _write(header: List[str], rows: Iterator[List[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def format_csv(report: ExperimentReport) -> str:
    return _write(CSV_HEADER, report_rows(report))


def format_sweep_csv(parameter: str, results: Sequence[Tuple[Union[int, float], ExperimentReport]]) -> str:
    def rows() -> Iterator[List[str]]:
        for value, report in results:
            for row in report_rows(report):
                yield [format_value(value)] + row

    return _write([parameter] + CSV_HEADER, rows())


def _cell(value: Optional[float], width: int = 9) -> str:
    return f"{'-':>{width}}" if value is None else f"{value:>{width}.4f}"


def format_table(report: ExperimentReport) -> str:
    """Pooled per-mode summary for a terminal."""
    cfg = report.config
    ran = len(report.seeds) - len(report.skipped_seeds)
    lines = [
        f"n={cfg['n']} area={cfg['width']:g}x{cfg['height']:g} range={cfg['radio_range']:g} "
        f"seeds={ran}/{len(report.seeds)} pairs/seed={cfg['pairs_per_seed']} rule={report.alignment_rule}",
        "",
        f"{'mode':<12} {'routed':>8} {'delivery':>9} {'greedy':>9} {'stretch':>9} {'g-hops':>9} {'asym':>9}",
    ]
    for m in report.aggregate:
        lines.append(
            f"{m.key:<12} {m.routed:>8} {_cell(m.delivery_rate)} {_cell(m.greedy_completion_ratio)} "
            f"{_cell(m.mean_stretch)} {_cell(m.mean_greedy_hop_fraction)} {_cell(m.asymmetry_rate)}"
        )
    if report.greedy_completion_delta:
        lines.append("")
        for d in report.greedy_completion_delta:
            if d.mean is None:
                lines.append(f"greedy completion delta (aligned-d{d.depth} - physical): n/a")
            else:
                lines.append(
                    f"greedy completion delta (aligned-d{d.depth} - physical): "
                    f"mean {d.mean:+.4f}, std {d.std:.4f} over {d.seeds} seeds"
                )
    if report.skipped_seeds:
        lines.append("")
        lines.append(f"skipped seeds (no connected pair): {', '.join(map(str, report.skipped_seeds))}")
    return "\n".join(lines) + "\n"
