"""
Command-line entry point.

    python -m src.cli generate --n 200 --width 2000 --height 2000 --radio-range 250 --seed 42
    python -m src.cli align --topology data/six_node.txt --depth 1
    python -m src.cli route --topology data/six_node.txt --src S --dst D --metric aligned --depth 1
    python -m src.cli compare --config data/reference_scale.cfg --output report.csv
    python -m src.cli sweep --config data/reference_scale.cfg --param radio_range --values 200,250,300

Exit codes: 0 success, 2 usage or config error, 1 runtime error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Union

from src.alignment import AlignmentParams, DepthAnchor, DeviationRule, DisplacementRule, align_all, format_table
from src.config.experiment import ExperimentConfig, load_config
from src.config.settings import settings
from src.errors import ConfigError, SimulationError
from src.harness import (
    SWEEP_PARAMETERS,
    format_csv,
    format_sweep_csv,
    format_table as format_report_table,
    run_experiment,
    run_sweep,
)
from src.routing import Metric, MetricMode, format_trace, route
from src.topology import FIXTURES, Topology, format_topology, generate_random, load_topology
from src.utils.logging_helper import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so cli_main owns the exit code."""

    def error(self, message):
        raise ConfigError(f"{self.prog}: {message}")


def _add_topology_args(p: argparse.ArgumentParser) -> None:
    source = p.add_argument_group("topology source (file, fixture, or generated)")
    source.add_argument("--topology", type=Path, help="Topology file")
    source.add_argument("--fixture", choices=sorted(FIXTURES), help="Built-in hand-made topology")
    source.add_argument("--n", type=int, help="Nodes to generate")
    source.add_argument("--width", type=float, help="Area width")
    source.add_argument("--height", type=float, help="Area height (defaults to width)")
    source.add_argument("--radio-range", type=float, help="Radio range")
    source.add_argument("--seed", type=int, default=0, help="Generator seed (default 0)")


def _add_alignment_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--deviation-rule", choices=[r.value for r in DeviationRule], default=DeviationRule.AS_WRITTEN.value)
    p.add_argument(
        "--displacement-rule",
        choices=[r.value for r in DisplacementRule],
        default=DisplacementRule.OFFSET_FROM_PHYSICAL.value,
    )
    p.add_argument("--depth-anchor", choices=[a.value for a in DepthAnchor], default=DepthAnchor.PREVIOUS_DEPTH.value)


def _add_experiment_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, required=True, help="Experiment config (key = value, or .yaml)")
    p.add_argument("--seed", type=int, help="Run only this seed instead of the config's list")
    p.add_argument("--workers", type=int, help=f"Seed-parallel worker processes (default {settings.EXPERIMENT_WORKERS})")
    p.add_argument("--output", type=Path, help="Write the CSV report here")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="csa-sim", description="Geographic routing over physical vs connectivity-aligned coordinates")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="Emit a topology file")
    _add_topology_args(p)
    p.add_argument("--output", type=Path, help="Write here instead of stdout")

    p = sub.add_parser("align", help="Emit an alignment table")
    _add_topology_args(p)
    p.add_argument("--depth", type=int, default=1)
    _add_alignment_args(p)
    p.add_argument("--output", type=Path, help="Write here instead of stdout")

    p = sub.add_parser("route", help="Route one pair and emit its trace")
    _add_topology_args(p)
    p.add_argument("--src", required=True, help="Source label or id")
    p.add_argument("--dst", required=True, help="Destination label or id")
    p.add_argument("--metric", choices=[m.value for m in MetricMode], default=MetricMode.PHYSICAL.value)
    p.add_argument("--depth", type=int, default=1, help="Alignment depth for --metric aligned")
    _add_alignment_args(p)
    p.add_argument("--ttl", type=int, help="Hop budget (default ceil(ttl_factor * n))")

    p = sub.add_parser("compare", help="Run the full comparison from a config file")
    _add_experiment_args(p)
    p.add_argument("--csv", action="store_true", help="Print the CSV report instead of the table")

    p = sub.add_parser("sweep", help="Repeat the comparison across values of one parameter")
    _add_experiment_args(p)
    p.add_argument("--param", choices=SWEEP_PARAMETERS, required=True)
    p.add_argument("--values", required=True, help="Comma separated values")

    return parser


def _topology(args: argparse.Namespace) -> Topology:
    chosen = [args.topology is not None, args.fixture is not None, args.n is not None]
    if sum(chosen) != 1:
        raise ConfigError("give exactly one of --topology, --fixture or --n (with --width and --radio-range)")
    if args.topology is not None:
        return load_topology(args.topology)
    if args.fixture is not None:
        return FIXTURES[args.fixture]()
    if args.width is None or args.radio_range is None:
        raise ConfigError("--n needs --width and --radio-range")
    height = args.width if args.height is None else args.height
    return generate_random(args.n, args.width, height, args.radio_range, args.seed)


def _params(args: argparse.Namespace) -> AlignmentParams:
    return AlignmentParams(
        DeviationRule(args.deviation_rule),
        DisplacementRule(args.displacement_rule),
        DepthAnchor(args.depth_anchor),
    )


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)
        logger.info(f"✅ Wrote {output}")


def _experiment_config(args: argparse.Namespace) -> ExperimentConfig:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg = cfg.model_copy(update={"seeds": [args.seed]})
    return cfg


def _parse_values(raw: str, parameter: str) -> List[Union[int, float]]:
    cast = float if parameter == "radio_range" else int
    try:
        return [cast(v) for v in raw.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(f"--values must be comma separated numbers, got {raw!r}")


def _run(args: argparse.Namespace) -> None:
    if args.command == "generate":
        _emit(format_topology(_topology(args)), args.output)

    elif args.command == "align":
        t = _topology(args)
        if args.depth < 0:
            raise ConfigError("--depth must be >= 0")
        _emit(format_table(align_all(t, args.depth, _params(args)), t.labels), args.output)

    elif args.command == "route":
        t = _topology(args)
        if args.metric == MetricMode.PHYSICAL.value:
            metric, table = Metric.physical(), None
        else:
            if args.depth < 0:
                raise ConfigError("--depth must be >= 0")
            params = _params(args)
            metric, table = Metric.aligned(args.depth, params), align_all(t, args.depth, params)
        trace = route(t, metric, table, t.resolve(args.src), t.resolve(args.dst), args.ttl)
        sys.stdout.write(format_trace(trace, t.labels))

    elif args.command == "compare":
        report = run_experiment(_experiment_config(args), args.workers)
        if args.output is not None:
            _emit(format_csv(report), args.output)
        sys.stdout.write(format_csv(report) if args.csv else format_report_table(report))

    elif args.command == "sweep":
        values = _parse_values(args.values, args.param)
        results = run_sweep(_experiment_config(args), args.param, values, args.workers)
        _emit(format_sweep_csv(args.param, results), args.output)


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help prints usage and exits
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging("DEBUG" if args.verbose else settings.LOG_LEVEL)
    try:
        _run(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SimulationError, OSError) as e:
        logger.error(f"❌ {args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(cli_main())
