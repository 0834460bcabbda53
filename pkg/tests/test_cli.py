"""Command-line surface: subcommands, determinism and exit codes."""

from src.cli import EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, cli_main


def test_generate_is_byte_identical_across_runs(capsys):
    argv = ["generate", "--n", "200", "--width", "2000", "--height", "2000", "--radio-range", "250", "--seed", "42"]
    assert cli_main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert cli_main(argv) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second
    lines = first.splitlines()
    assert lines[0] == "# seed 42"
    assert lines[1] == "200 250.0"
    assert len(lines) == 202


def test_generate_writes_a_file(tmp_path):
    out = tmp_path / "t.txt"
    assert cli_main(["generate", "--fixture", "six_node", "--output", str(out)]) == EXIT_OK
    assert out.read_text().splitlines()[1] == "S 0.0 1.0"


def test_route_six_node_aligned(capsys, data_dir):
    argv = ["route", "--topology", str(data_dir / "six_node.txt"), "--src", "S", "--dst", "D",
            "--metric", "aligned", "--depth", "1"]
    assert cli_main(argv) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "outcome Delivered"
    assert [line.split()[1] for line in lines[:-1]] == ["S", "B", "C", "D"]


def test_route_table_placement_physical_uses_perimeter(capsys, data_dir):
    argv = ["route", "--topology", str(data_dir / "six_node_table.txt"), "--src", "S", "--dst", "D"]
    assert cli_main(argv) == EXIT_OK
    out = capsys.readouterr().out
    assert "2 S perimeter" in out.splitlines()
    assert out.splitlines()[-1] == "outcome Delivered"


def test_align_emits_depth_then_coordinates(capsys):
    assert cli_main(["align", "--fixture", "six_node", "--depth", "2", "--deviation-rule", "sample_std"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "2"
    assert [line.split()[0] for line in lines[1:]] == ["S", "A", "B", "C", "D", "E"]


def test_missing_config_is_a_usage_error(capsys):
    assert cli_main(["compare", "--config", "missing.cfg"]) == EXIT_USAGE
    assert "missing.cfg" in capsys.readouterr().err


def test_usage_errors_exit_two():
    assert cli_main([]) == EXIT_USAGE
    assert cli_main(["teleport"]) == EXIT_USAGE
    assert cli_main(["route", "--src", "S", "--dst", "D"]) == EXIT_USAGE
    assert cli_main(["generate", "--n", "10"]) == EXIT_USAGE


def test_help_returns_an_exit_code(capsys):
    code = cli_main(["--help"])
    assert isinstance(code, int)
    assert code == EXIT_OK
    assert "usage" in capsys.readouterr().out
    assert cli_main(["route", "--help"]) == EXIT_OK


def test_runtime_errors_exit_one(capsys, data_dir, tmp_path):
    topology = str(data_dir / "six_node.txt")
    assert cli_main(["route", "--topology", topology, "--src", "S", "--dst", "Z"]) == EXIT_RUNTIME
    assert cli_main(["route", "--topology", topology, "--src", "S", "--dst", "S"]) == EXIT_RUNTIME
    assert cli_main(["route", "--topology", str(tmp_path / "none.txt"), "--src", "0", "--dst", "1"]) == EXIT_RUNTIME
    assert "error:" in capsys.readouterr().err


def test_compare_prints_table_and_writes_csv(capsys, data_dir, tmp_path):
    out = tmp_path / "report.csv"
    assert cli_main(["compare", "--config", str(data_dir / "smoke.yaml"), "--seed", "2", "--output", str(out)]) == EXIT_OK
    table = capsys.readouterr().out
    assert "physical" in table and "aligned-d1" in table
    rows = out.read_text().splitlines()
    assert rows[0] == "seed,mode,depth,metric,value"
    assert {row.split(",")[0] for row in rows[1:]} == {"2", "all"}


def test_compare_csv_to_stdout(capsys, data_dir):
    assert cli_main(["compare", "--config", str(data_dir / "smoke.yaml"), "--seed", "1", "--csv"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("seed,mode,depth,metric,value\n")


def test_sweep_over_radio_range(capsys, data_dir):
    argv = ["sweep", "--config", str(data_dir / "smoke.yaml"), "--seed", "1", "--param", "radio_range",
            "--values", "120,180"]
    assert cli_main(argv) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "radio_range,seed,mode,depth,metric,value"
    assert {line.split(",")[0] for line in lines[1:]} == {"120", "180"}


def test_sweep_bad_values_are_usage_errors(data_dir):
    argv = ["sweep", "--config", str(data_dir / "smoke.yaml"), "--param", "n", "--values", "ten"]
    assert cli_main(argv) == EXIT_USAGE
