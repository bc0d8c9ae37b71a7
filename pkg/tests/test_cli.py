"""End-to-end CLI behavior: subcommands, exit codes, file contracts."""

import csv
import json
import subprocess
import sys

import pytest

from orthocount.asymptotics import CSV_COLUMNS
from orthocount.cli import main
from orthocount.graphs import build_affine_graph, parse_graph_export


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "orthocount", *args],
        capture_output=True,
        text=True,
        **kwargs,
    )


# ---------------------------------------------------------------------------
# usage errors and help (exit code 2 / 0)
# ---------------------------------------------------------------------------


def test_no_arguments_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err.lower()


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["predict", "--q", "3", "--d", "4", "--k", "3", "--m", "81", "--frob", "1"])
    assert exc.value.code == 2


def test_missing_required_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--q", "3", "--d", "3"])
    assert exc.value.code == 2


def test_unparseable_number_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["predict", "--q", "three", "--d", "4", "--k", "3", "--m", "81"])
    assert exc.value.code == 2


def test_help_exits_zero():
    for args in (["--help"], ["predict", "--help"], ["experiment", "--help"]):
        with pytest.raises(SystemExit) as exc:
            main(args)
        assert exc.value.code == 0


# ---------------------------------------------------------------------------
# predict
# ---------------------------------------------------------------------------


def test_predict_output(capsys):
    assert main(["predict", "--q", "3", "--d", "4", "--k", "3", "--m", "81"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lambda_k_formula"] == pytest.approx(81**3 / 6 / 27)
    assert payload["threshold_new"] == 81.0
    assert payload["threshold_old"] == 81.0
    assert payload["alon_formula"] == pytest.approx(81**3 / 6 * (26 / 80) ** 3)


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------


def test_build_export(tmp_path, capsys):
    out = tmp_path / "g.adj"
    assert main(["build", "--family", "affine", "--q", "3", "--d", "3", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "affine 3 3 26 8"
    parsed = parse_graph_export(lines)
    assert parsed["rows"] == list(build_affine_graph(3, 3).rows)


def test_build_to_stdout(capsys):
    assert main(["build", "--family", "projective", "--q", "2", "--d", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "projective 2 3 7 3"
    assert len(lines) == 8


def test_build_bound_override_via_env(tmp_path):
    result = run_cli(
        "build", "--family", "affine", "--q", "5", "--d", "4",
        "--out", str(tmp_path / "x"),
        env={"ORTHOCOUNT_MAX_N": "100", "PATH": "/usr/bin:/bin"},
    )
    assert result.returncode == 1
    assert "exceeds bound 100" in result.stderr


# ---------------------------------------------------------------------------
# verify-spectrum
# ---------------------------------------------------------------------------


def test_verify_spectrum_json(capsys):
    assert main(["verify-spectrum", "--family", "affine", "--q", "3", "--d", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["pass"] is True
    assert payload["n"] == 26
    assert payload["degree"] == 8
    assert payload["mu_or_rho"] == 2
    assert payload["second_squared"] == 12
    assert payload["violations"] == []
    assert payload["field"] == "GF(3^1; modulus=0,1)"


def test_verify_spectrum_projective(capsys):
    assert main(["verify-spectrum", "--family", "projective", "--q", "4", "--d", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["pass"] is True and payload["mu_or_rho"] == 1
    assert payload["field"] == "GF(2^2; modulus=1,1,1)"


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------


def test_count_full_graph(capsys):
    assert main(["count", "--q", "3", "--d", "3", "--k", "2"]) == 0
    assert json.loads(capsys.readouterr().out) == {"m": 26, "k": 2, "lambda_k": 200}


def test_count_with_subset_file(tmp_path, capsys):
    subset = tmp_path / "subset.txt"
    subset.write_text("1,0,0\n0,1,0\n0,0,1\n")
    assert main(["count", "--q", "3", "--d", "3", "--k", "3", "--subset", str(subset)]) == 0
    assert json.loads(capsys.readouterr().out) == {"m": 3, "k": 3, "lambda_k": 6}


def test_count_rejects_zero_vector_subset(tmp_path, capsys):
    subset = tmp_path / "subset.txt"
    subset.write_text("1,0,0\n0,0,0\n")
    assert main(["count", "--q", "3", "--d", "3", "--k", "2", "--subset", str(subset)]) == 1
    assert "zero vector" in capsys.readouterr().err


def test_count_rejects_non_vertex(tmp_path, capsys):
    subset = tmp_path / "subset.txt"
    subset.write_text("1,0\n")
    assert main(["count", "--q", "3", "--d", "3", "--k", "2", "--subset", str(subset)]) == 1


# ---------------------------------------------------------------------------
# experiment
# ---------------------------------------------------------------------------

CONFIG = "q = 3\nd = 3\nk = 2\ndensities = 0.5, 1.0\ntrials = 2\nseed = 42\n"


def test_experiment_csv_and_json(tmp_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text(CONFIG)
    out_csv = tmp_path / "rows.csv"
    out_json = tmp_path / "rows.json"
    assert main([
        "experiment", "--config", str(cfg),
        "--out-csv", str(out_csv), "--out-json", str(out_json),
    ]) == 0

    text = out_csv.read_text()
    assert "\r" not in text  # LF endings, locale-free
    with open(out_csv, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == list(CSV_COLUMNS)
    assert len(rows) == 4

    data = json.loads(out_json.read_text())
    assert len(data) == len(rows)
    for parsed, emitted in zip(rows, data):
        # CSV round-trips to the same values the JSON carries
        assert int(parsed["observed"]) == emitted["observed"]
        assert float(parsed["predicted_main"]) == emitted["predicted_main"]
        assert float(parsed["relative_error"]) == emitted["relative_error"]
        assert int(parsed["seed_used"]) == emitted["seed_used"]
        assert int(parsed["m"]) == emitted["m"]


def test_experiment_is_byte_reproducible(tmp_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text(CONFIG)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["experiment", "--config", str(cfg), "--out-csv", str(a)]) == 0
    assert main(["experiment", "--config", str(cfg), "--out-csv", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_experiment_header_only_for_empty_rows(tmp_path):
    from orthocount.cli import emit_reports

    out_csv = tmp_path / "empty.csv"
    out_json = tmp_path / "empty.json"
    emit_reports([], str(out_csv), str(out_json))
    assert out_csv.read_text() == ",".join(CSV_COLUMNS) + "\n"
    assert json.loads(out_json.read_text()) == []


def test_experiment_missing_config_is_runtime_error(tmp_path, capsys):
    assert main([
        "experiment", "--config", str(tmp_path / "nope.cfg"),
        "--out-csv", str(tmp_path / "out.csv"),
    ]) == 1
    assert "error" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# one true end-to-end subprocess check
# ---------------------------------------------------------------------------


def test_subprocess_round_trip(tmp_path):
    result = run_cli("count", "--q", "3", "--d", "3", "--k", "2")
    assert result.returncode == 0
    assert json.loads(result.stdout) == {"m": 26, "k": 2, "lambda_k": 200}
    bad = run_cli("bogus")
    assert bad.returncode == 2
