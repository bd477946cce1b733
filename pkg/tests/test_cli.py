import csv
import json

import pytest

from catcluster.cli import build_parser, config_from_args, main
from catcluster.globals import DEFAULT_TOLERANCES
from catcluster.states import load_state, norm2


def _read_csv(path):
    with open(path, encoding="utf-8", newline="") as handle:
        return list(csv.reader(handle))


@pytest.fixture
def fidelity_args():
    """Arguments for a three-point two-qubit fidelity sweep"""
    return ["fidelity", "--alpha-min", "6", "--alpha-max", "10", "--steps", "3", "--quiet"]


def test_config_from_args(tmp_path):
    """Tests that unset flags are left to the SweepConfig defaults"""
    args = build_parser().parse_args(["tradeoff", "--no-penalty", "--out", str(tmp_path)])
    config = config_from_args(args)
    assert config["penalty"] is False
    assert config["out_path"] == str(tmp_path)
    assert "model" not in config and "alpha_min" not in config


def test_fidelity_csv(tmp_path, fidelity_args):
    """Tests the fidelity CSV layout"""
    out = tmp_path / "fidelity.csv"
    assert main(fidelity_args + ["--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == ["alpha", "fidelity", "er"]
    assert [row[0] for row in rows[1:]] == ["6", "8", "10"]
    fidelities = [float(row[1]) for row in rows[1:]]
    assert fidelities == sorted(fidelities)


def test_fidelity_two_steps(tmp_path):
    """Tests that steps = 2 gives the two endpoints"""
    out = tmp_path / "fidelity.csv"
    assert main(["fidelity", "--alpha-min", "8", "--alpha-max", "9", "--steps", "2", "--quiet", "--out", str(out)]) == 0
    assert len(_read_csv(out)) == 3


def test_fidelity_long_format(tmp_path, fidelity_args):
    """Tests the long metrics rows"""
    out = tmp_path / "long.csv"
    assert main(fidelity_args + ["--graph", "three", "--long", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == ["alpha", "graph", "quantity", "value", "er"]
    assert rows[1][1:3] == ["three", "fidelity"]


def test_reruns_are_byte_identical(tmp_path, fidelity_args):
    """Tests that repeated runs and more threads write the same bytes"""
    first, second, threaded = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "c.csv"
    assert main(fidelity_args + ["--out", str(first)]) == 0
    assert main(fidelity_args + ["--out", str(second)]) == 0
    assert main(fidelity_args + ["--threads", "2", "--out", str(threaded)]) == 0
    assert first.read_bytes() == second.read_bytes() == threaded.read_bytes()


@pytest.mark.parametrize(
    "extra, message",
    [
        (["--steps", "1"], "invalid steps"),
        (["--alpha-min", "10", "--alpha-max", "6"], "invalid"),
        (["--graph", "seventeenStar"], "InvalidSweepConfig"),
        (["--threads", "0"], "invalid threads"),
    ],
)
def test_invalid_config_exit_code(tmp_path, capsys, extra, message):
    """Tests that bad settings end with exit code 2 and a one-line message"""
    assert main(["fidelity", "--quiet", "--out", str(tmp_path / "x.csv")] + extra) == 2
    err = capsys.readouterr().err
    assert err.startswith("catcluster fidelity:")
    assert message in err
    assert not (tmp_path / "x.csv").exists()


def test_unknown_choice_exits(tmp_path):
    """Tests that argparse rejects unknown presets"""
    with pytest.raises(SystemExit) as exc:
        main(["fidelity", "--graph", "sixteenStar", "--out", str(tmp_path / "x.csv")])
    assert exc.value.code == 2


def test_visibility_csv(tmp_path):
    """Tests the visibility CSV layout"""
    out = tmp_path / "visibility.csv"
    args = ["visibility", "--pattern", "XZ", "--alpha-min", "10", "--alpha-max", "12", "--steps", "2", "--quiet"]
    assert main(args + ["--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == ["alpha", "visibility", "ideal_visibility", "er"]
    assert all(0.0 <= float(value) <= 1.0 for row in rows[1:] for value in row[1:3])


def test_visibility_not_a_stabilizer(tmp_path, capsys):
    """Tests a pattern outside the stabilizer group"""
    assert main(["visibility", "--pattern", "XX", "--quiet", "--out", str(tmp_path / "v.csv")]) == 2
    assert "InvalidOperatorPattern" in capsys.readouterr().err


def test_integral_tolerance_from_environment(tmp_path, monkeypatch):
    """Tests that CATCLUST_TOL is read at call time"""
    monkeypatch.setenv("CATCLUST_TOL", "1e-8")
    assert DEFAULT_TOLERANCES.integral() == 1e-8
    out = tmp_path / "visibility.csv"
    args = ["visibility", "--pattern", "XZ", "--alpha-min", "10", "--alpha-max", "11", "--steps", "2", "--quiet"]
    assert main(args + ["--out", str(out)]) == 0
    monkeypatch.delenv("CATCLUST_TOL")
    assert DEFAULT_TOLERANCES.integral() == DEFAULT_TOLERANCES.INTEGRAL


def test_teleport_csv(tmp_path):
    """Tests the teleporter record CSV"""
    out = tmp_path / "teleport.csv"
    assert main(["teleport", "--alpha", "2", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == ["n1", "n2", "n3", "n4", "prob", "fidelity_raw", "fidelity_corrected", "correction_id"]
    assert sum(float(row[4]) for row in rows[1:]) == pytest.approx(1.0, abs=1e-6)


def test_teleport_slice(tmp_path):
    """Tests writing a single pattern slice"""
    out = tmp_path / "slice.csv"
    assert main(["teleport", "--alpha", "2", "--slice", "na00nb", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == ["n_a", "n_b", "prob", "fidelity"]
    assert len(rows) > 1


def test_teleport_pauli_frame(tmp_path):
    """Tests that the Pauli frame never beats the default phase frame record by record"""
    phase, pauli = tmp_path / "phase.csv", tmp_path / "pauli.csv"
    assert main(["teleport", "--alpha", "2", "--out", str(phase)]) == 0
    assert main(["teleport", "--alpha", "2", "--frame", "pauli", "--out", str(pauli)]) == 0
    phase_rows, pauli_rows = _read_csv(phase)[1:], _read_csv(pauli)[1:]
    assert [row[:4] for row in phase_rows] == [row[:4] for row in pauli_rows]
    assert all(float(a[6]) >= float(b[6]) - 1e-12 for a, b in zip(phase_rows, pauli_rows))


def test_teleport_cutoff_too_small(tmp_path, capsys):
    """Tests that an explicit cutoff below the completeness rule fails cleanly"""
    assert main(["teleport", "--alpha", "3", "--cutoff", "2", "--out", str(tmp_path / "t.csv")]) == 2
    assert "CutoffTooSmallError" in capsys.readouterr().err


def test_dump_state_bell(tmp_path):
    """Tests the JSON dump of the Bell resource"""
    out = tmp_path / "states" / "bell.json"
    assert main(["dump-state", "--alpha", "2", "--kind", "bell", "--out", str(out)]) == 0
    state = load_state(out)
    assert state.modes == 2 and len(state) == 2
    assert norm2(state) == pytest.approx(1.0, abs=1e-12)


def test_tradeoff_without_crossing(tmp_path):
    """Tests the per-amplitude curves and a summary for a grid below the threshold"""
    args = ["tradeoff", "--alpha-min", "2", "--alpha-max", "2.5", "--steps", "2", "--quiet", "--no-penalty"]
    assert main(args + ["--out", str(tmp_path)]) == 0
    for name in ("tradeoff_alpha_2.0000.csv", "tradeoff_alpha_2.5000.csv"):
        rows = _read_csv(tmp_path / name)
        assert rows[0] == ["alpha", "reported_alpha", "set_size", "er_comp", "er_loss", "f_av", "p_det"]
        assert rows[1][0] == rows[1][1]
    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["crossing_alpha"] is None
    assert summary["rows"] == []
    assert summary["model"]["name"] == "barrett"
    assert summary["penalty"] is False
