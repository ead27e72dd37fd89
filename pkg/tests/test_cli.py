"""End-to-end tests of the command-line driver (in-process where possible)."""

import json
import subprocess
import sys

import numpy as np
import pytest

import qlitho.cli as cli
from qlitho.dosing import phase_grid
from qlitho.synthesis import trench_target


def run_cli(monkeypatch, tmp_path, *argv):
    monkeypatch.chdir(tmp_path)
    return cli.main(list(argv))


def read_rows(path):
    text = path.read_text(encoding="ascii")
    lines = text.splitlines()
    return lines[0], [line.split(",") for line in lines[1:]]


# ---------------------------------------------------------------------------
# happy paths
# ---------------------------------------------------------------------------

def test_fringe_csv_layout(monkeypatch, tmp_path, capsys):
    code = run_cli(monkeypatch, tmp_path, "--command", "fringe", "--grid", "8")
    assert code == 0
    header, rows = read_rows(tmp_path / "fringe.csv")
    assert header == "phi,delta_1_classical,delta_2_classical,delta_2_quantum"
    assert len(rows) == 8
    assert rows[0] == ["0", "2", "2", "2"]
    out = capsys.readouterr().out
    assert "two-photon fringe check: max deviation" in out


def test_fringe_single_arm_convention(monkeypatch, tmp_path):
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "fringe", "--grid", "16", "--convention", "paper",
    )
    assert code == 0
    _, rows = read_rows(tmp_path / "fringe.csv")
    quantum = np.array([float(r[3]) for r in rows])
    phis = phase_grid(16)
    assert np.max(np.abs(quantum - (1.0 + np.cos(2.0 * phis)))) < 1e-9


def test_csv_uses_lf_and_ascii(monkeypatch, tmp_path):
    run_cli(monkeypatch, tmp_path, "--command", "classical", "--grid", "8")
    data = (tmp_path / "classical.csv").read_bytes()
    assert b"\r" not in data
    assert data.endswith(b"\n")
    data.decode("ascii")  # raises if any non-ascii byte slipped in


def test_noon_outputs_and_feature_size(monkeypatch, tmp_path, capsys):
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "noon", "--n", "4", "--grid", "64",
        "--wavelength-nm", "248",
    )
    assert code == 0
    header, rows = read_rows(tmp_path / "noon.csv")
    assert header == "phi,simulated,analytic,abs_error"
    assert len(rows) == 64
    assert float(rows[0][1]) == pytest.approx(2.0, abs=1e-12)
    out = capsys.readouterr().out
    assert "max |simulated - analytic| =" in out
    assert "minimum feature at N=4, wavelength 248 nm: 31 nm" in out


def test_compare_matches_peaks(monkeypatch, tmp_path):
    code = run_cli(
        monkeypatch, tmp_path, "--command", "compare", "--n", "6", "--grid", "32"
    )
    assert code == 0
    header, rows = read_rows(tmp_path / "compare.csv")
    assert header == "phi,classical,quantum"
    assert float(rows[0][1]) == pytest.approx(2.0, abs=1e-12)
    assert float(rows[0][2]) == pytest.approx(2.0, abs=1e-9)


def test_out_stem_strips_known_suffixes(monkeypatch, tmp_path):
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "classical", "--grid", "8", "--out", "results.csv",
    )
    assert code == 0
    assert (tmp_path / "results.csv").exists()
    assert not (tmp_path / "results.csv.csv").exists()


def test_svg_format(monkeypatch, tmp_path):
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "classical", "--grid", "16", "--format", "svg",
    )
    assert code == 0
    assert not (tmp_path / "classical.csv").exists()
    svg = (tmp_path / "classical.svg").read_text(encoding="ascii")
    assert svg.startswith("<svg")
    assert 'width="800"' in svg and 'height="500"' in svg


def test_both_formats(monkeypatch, tmp_path):
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "classical", "--grid", "8", "--format", "both",
    )
    assert code == 0
    assert (tmp_path / "classical.csv").exists()
    assert (tmp_path / "classical.svg").exists()


def test_svg_output_is_deterministic(monkeypatch, tmp_path):
    first = tmp_path / "a"
    second = tmp_path / "b"
    first.mkdir()
    second.mkdir()
    for where in (first, second):
        code = run_cli(
            monkeypatch, where,
            "--command", "noon", "--n", "3", "--grid", "32", "--format", "svg",
        )
        assert code == 0
    assert (first / "noon.svg").read_bytes() == (second / "noon.svg").read_bytes()


# ---------------------------------------------------------------------------
# synthesize
# ---------------------------------------------------------------------------

SMALL_GA = [
    "--population", "12", "--generations", "8", "--grid", "64",
    "--partitions", "1,2,3", "--seed", "7",
]


def test_synthesize_outputs(monkeypatch, tmp_path, capsys):
    code = run_cli(monkeypatch, tmp_path, "--command", "synthesize", *SMALL_GA)
    assert code == 0
    header, rows = read_rows(tmp_path / "synthesize.csv")
    assert header == "phi,target,classical_best,quantum_best"
    assert len(rows) == 64

    summary = json.loads((tmp_path / "synthesize_summary.json").read_text())
    assert summary["n"] == 10
    assert summary["partitions"] == [1, 2, 3]
    assert summary["seed"] == 7
    assert summary["trace_final"] <= summary["trace_initial"]
    assert len(summary["coefficients"]) == 3
    norm = sum(c["re"] ** 2 + c["im"] ** 2 for c in summary["coefficients"])
    assert norm == pytest.approx(1.0, abs=1e-9)
    assert summary["scale"] > 0.0

    out = capsys.readouterr().out
    assert "GA fitness" in out and "classical error" in out and "(seed 7)" in out


def test_synthesize_is_byte_deterministic(monkeypatch, tmp_path):
    first = tmp_path / "a"
    second = tmp_path / "b"
    first.mkdir()
    second.mkdir()
    for where in (first, second):
        code = run_cli(monkeypatch, where, "--command", "synthesize", *SMALL_GA)
        assert code == 0
    assert (first / "synthesize.csv").read_bytes() == (second / "synthesize.csv").read_bytes()
    assert (
        first / "synthesize_summary.json"
    ).read_bytes() == (second / "synthesize_summary.json").read_bytes()


def test_synthesize_flags_classical_family_target(monkeypatch, tmp_path):
    # A target the classical fringe family contains exactly must yield a
    # near-zero classical benchmark error in the summary.
    phis = phase_grid(32)
    samples = 1.0 + 0.5 * np.cos(2.0 * phis + 0.3)
    lines = [f"{phi:.17g},{val:.17g}" for phi, val in zip(phis, samples)]
    target_path = tmp_path / "family.csv"
    target_path.write_text("\n".join(lines) + "\n", encoding="ascii")
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "synthesize",
        "--population", "8", "--generations", "2", "--partitions", "1",
        "--target", str(target_path),
    )
    assert code == 0
    summary = json.loads((tmp_path / "synthesize_summary.json").read_text())
    assert summary["classical_error"] < 1e-8


def test_noon_single_photon_matches_classical_fringe(monkeypatch, tmp_path):
    code = run_cli(monkeypatch, tmp_path, "--command", "noon", "--n", "1", "--grid", "32")
    assert code == 0
    _, rows = read_rows(tmp_path / "noon.csv")
    phis = phase_grid(32)
    simulated = np.array([float(r[1]) for r in rows])
    assert np.max(np.abs(simulated - (1.0 + np.cos(2.0 * phis)))) < 1e-9


def test_synthesize_reads_target_csv(monkeypatch, tmp_path):
    target = trench_target(32)
    lines = ["phi,value"]
    lines += [f"{phi:.17g},{val:.17g}" for phi, val in zip(target.phis, target.samples)]
    target_path = tmp_path / "pattern.csv"
    target_path.write_text("\n".join(lines) + "\n", encoding="ascii")
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "synthesize",
        "--population", "8", "--generations", "4", "--partitions", "1,2",
        "--target", str(target_path),
    )
    assert code == 0
    _, rows = read_rows(tmp_path / "synthesize.csv")
    assert len(rows) == 32
    assert float(rows[0][1]) == 1.0


# ---------------------------------------------------------------------------
# configuration file
# ---------------------------------------------------------------------------

def test_config_file_applies_and_flags_win(monkeypatch, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("grid = 16\nn = 2  # inline comment\n", encoding="ascii")
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "classical", "--config", str(cfg), "--grid", "8",
    )
    assert code == 0
    _, rows = read_rows(tmp_path / "classical.csv")
    assert len(rows) == 8  # flag beat the config file

    code = run_cli(monkeypatch, tmp_path, "--command", "classical", "--config", str(cfg))
    assert code == 0
    _, rows = read_rows(tmp_path / "classical.csv")
    assert len(rows) == 16  # config beat the default


def test_config_file_rejects_unknown_keys(monkeypatch, tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("gird = 16\n", encoding="ascii")
    code = run_cli(
        monkeypatch, tmp_path, "--command", "classical", "--config", str(cfg)
    )
    assert code == 2
    assert "unknown option" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------

def test_bad_flag_exits_two(monkeypatch, tmp_path, capsys):
    assert run_cli(monkeypatch, tmp_path, "--command", "warp") == 2
    assert run_cli(monkeypatch, tmp_path) == 2
    capsys.readouterr()


def test_bad_values_exit_two(monkeypatch, tmp_path, capsys):
    assert run_cli(monkeypatch, tmp_path, "--command", "classical", "--grid", "2") == 2
    assert (
        run_cli(
            monkeypatch, tmp_path,
            "--command", "synthesize", "--partitions", "6",
        )
        == 2
    )
    err = capsys.readouterr().err
    assert "bad arguments" in err


def test_missing_config_exits_three(monkeypatch, tmp_path, capsys):
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "classical", "--config", str(tmp_path / "absent.cfg"),
    )
    assert code == 3
    assert "i/o failure" in capsys.readouterr().err


def test_unwritable_out_exits_three(monkeypatch, tmp_path, capsys):
    code = run_cli(
        monkeypatch, tmp_path,
        "--command", "classical", "--grid", "8",
        "--out", str(tmp_path / "no" / "such" / "dir" / "x"),
    )
    assert code == 3
    capsys.readouterr()


def test_tolerance_violation_exits_four(monkeypatch, tmp_path, capsys):
    # Sabotage the dose routine so the noon self-check must trip.
    monkeypatch.setattr(
        cli, "deposition_rate", lambda state, n, phi, convention: 42.0
    )
    code = run_cli(monkeypatch, tmp_path, "--command", "noon", "--grid", "8")
    assert code == 4
    assert "tolerance violation" in capsys.readouterr().err


def test_help_exits_zero(monkeypatch, tmp_path, capsys):
    assert run_cli(monkeypatch, tmp_path, "--help") == 0
    assert "--command" in capsys.readouterr().out


def test_module_entry_point(tmp_path):
    result = subprocess.run(
        [
            sys.executable, "-m", "qlitho",
            "--command", "classical", "--n", "1", "--grid", "8",
            "--out", str(tmp_path / "direct"),
        ],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert (tmp_path / "direct.csv").exists()
