"""
Byte-for-byte golden outputs under tests/golden/.

A change here means seeded output moved: positions, pair draws, alignment or routing
decisions. Regenerate the files only when that is intended.
"""

from pathlib import Path

from src.alignment import align_all, format_table
from src.cli import EXIT_OK, cli_main
from src.config.experiment import load_config
from src.harness import format_csv, run_experiment
from src.topology import FIXTURES, format_topology, generate_random

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text()


def test_six_node_depth_one_table():
    t = FIXTURES["six_node"]()
    assert format_table(align_all(t, 1), t.labels) == golden("six_node_depth1.txt")


def test_smoke_topology_for_seed_one():
    assert format_topology(generate_random(60, 600.0, 600.0, 150.0, 1)) == golden("smoke_seed1_topology.txt")


def test_smoke_report_for_seed_one(data_dir):
    cfg = load_config(data_dir / "smoke.yaml").model_copy(update={"seeds": [1]})
    assert format_csv(run_experiment(cfg, workers=1)) == golden("smoke_seed1.csv")


def test_cli_compare_writes_the_golden_csv(data_dir, tmp_path):
    out = tmp_path / "report.csv"
    argv = ["compare", "--config", str(data_dir / "smoke.yaml"), "--seed", "1", "--output", str(out)]
    assert cli_main(argv) == EXIT_OK
    assert out.read_text() == golden("smoke_seed1.csv")


def test_cli_generate_prints_the_golden_topology(capsys):
    argv = ["generate", "--n", "60", "--width", "600", "--radio-range", "150", "--seed", "1"]
    assert cli_main(argv) == EXIT_OK
    assert capsys.readouterr().out == golden("smoke_seed1_topology.txt")
