import csv
import json

import pytest

from genus2split.cli import main
from genus2split.multipoly import MultiPoly
from genus2split import catalog


def _run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_invariants_command(capsys):
    code, data = _run_json(capsys, ["invariants", "1", "0", "0", "0", "0", "0", "1"])
    assert code == 0
    assert data["igusa"]["J2"] == "-240"
    assert data["absolute"]["i1"] == "81/20"


def test_cubic_pair_command(capsys):
    code, data = _run_json(capsys, [
        "cubic-pair", "1", "2", "1", "4", "1", "1", "1", "1"])
    assert code == 0
    assert data["H"] == "10/3"
    assert data["r1"] == "-3375/2"


def test_theta_command_and_degenerate_error(capsys):
    code, data = _run_json(capsys, ["theta", "25/2", "250/9"])
    assert code == 0
    assert data["invariants"]["i3"] == "-531441/100000"
    code, data = _run_json(capsys, ["theta", "-7/2", "2"])
    assert code == 1
    assert data["error"] == "DegenerateParameters"
    assert "J10" in data["message"]


def test_theta_with_quadratic_scalars(capsys):
    code, data = _run_json(capsys, [
        "theta", "-15/8+35/8*sqrt(5)", "25/2+35/6*sqrt(5)"])
    assert code == 0
    assert data["invariants"]["i1"] == "81"


def test_uv_to_r_and_rho_round(capsys):
    code, data = _run_json(capsys, ["uv-to-r", "1", "1"])
    assert code == 0
    code2, data2 = _run_json(capsys, ["rho", data["rho_r1"], data["rho_r2"]])
    assert code2 == 0
    code3, data3 = _run_json(capsys, ["theta", "1", "1"])
    assert data2["invariants"] == data3["invariants"]


def test_surface_eval_and_text_round_trip(capsys):
    code, data = _run_json(capsys, [
        "surface-eval", "--surface", "s2", "0", "729/50", "729/12800000"])
    assert code == 0 and data["is_zero"]
    code, data = _run_json(capsys, ["surface-eval", "--surface", "c1", "--text"])
    assert code == 0
    assert MultiPoly.from_text(data["polynomial"]) == catalog.C1


def test_singular_and_classify_commands(capsys):
    code, data = _run_json(capsys, ["singular", "0", "729/50", "729/12800000"])
    assert code == 0 and data["is_singular"]
    code, data = _run_json(capsys, [
        "singular", "0", "729/50", "729/12800000", "--precision", "50"])
    assert code == 0 and data["mode"] == "numeric" and data["is_singular"]
    code, data = _run_json(capsys, ["classify", "81", "-5103/25", "-729/12500"])
    assert code == 0 and data["group"] == "D6"


def test_verify_subset_exit_code_and_lines(capsys):
    code = main(["verify", "t3_points", "table1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "t3_points: DISCREPANCY" in out
    assert "table1: DISCREPANCY" in out


def test_verify_unknown_check_is_usage_error(capsys):
    assert main(["verify", "bogus_check"]) == 2


def test_verify_json_output(capsys, tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "eqr_consistency", "--samples", "5", "--out", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["status"] == "ok"
    assert data["reports"][0]["identity"] == "eqr_consistency"


def test_sample_writes_csv_and_figure(capsys, tmp_path):
    csv_path = tmp_path / "pts.csv"
    fig_path = tmp_path / "pts.png"
    code = main(["sample", "--family", "split-sextics", "--count", "12",
                 "--out", str(csv_path), "--fig", str(fig_path)])
    assert code == 0
    with open(csv_path) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 12
    assert all(float(r["residual"]) == 0.0 for r in rows)
    assert fig_path.exists() and fig_path.stat().st_size > 0


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["theta", "1"])
    assert exc.value.code == 2
