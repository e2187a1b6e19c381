from __future__ import annotations

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from minimode.run.app import app

runner = CliRunner()


def _invoke(*args: str):
    return runner.invoke(app, list(args))


def test_estimate_city_hsm() -> None:
    result = _invoke("estimate", "--city", "x")
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["schema"] == 1
    assert payload["value"] == 50.0
    assert payload["estimator"] == "hsm"


def test_estimate_weighted_file(tmp_path: Path) -> None:
    data = tmp_path / "tracks.csv"
    data.write_text("z,pt\n0.0,1\n1.0,1\n1.1,1\n5.0,1\n")
    out = tmp_path / "est.json"
    result = _invoke("estimate", "-f", str(data), "-e", "fsmw", "--p", "0.5", "-o", str(out))
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["value"] == pytest.approx(1.05)


def test_estimate_scale_and_config_override(tmp_path: Path) -> None:
    result = _invoke("estimate", "--city", "x", "-e", "mad")
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["method"] == "mad"
    result = _invoke("estimate", "--city", "x", "-e", "fsm", "-c", "estimators.fsm.alpha=0.5")
    assert json.loads(result.stdout)["value"] == 50.0


@pytest.mark.parametrize(
    ("args", "code"),
    [
        (("estimate",), 2),
        (("estimate", "--city", "x", "-e", "mode9"), 3),
        (("estimate", "--city", "x", "-e", "modal_interval", "--width", "0"), 3),
        (("estimate", "--city", "x", "-c", "run.colour=1"), 4),
        (("estimate", "--city", "y"), 2),
        (("study", "--reps", "50"), 4),
        (("study", "--n", "25", "--eps", "0.1", "--reps", "100", "-e", "hsm", "--dist", "normal"), 4),
        (("bootstrap", "--city", "x", "--b", "10"), 4),
    ],
)
def test_exit_codes_follow_error_family(args: tuple[str, ...], code: int) -> None:
    result = _invoke(*args)
    assert result.exit_code == code


def test_empty_input_file_exit_code(tmp_path: Path) -> None:
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    assert _invoke("estimate", "-f", str(empty)).exit_code == 2
    assert _invoke("estimate", "-f", str(empty), "--city", "x").exit_code == 2


def _study(tmp_path: Path, name: str, *extra: str) -> bytes:
    out = tmp_path / name
    args = ["study", "-e", "hsm", "-e", "median", "--dist", "normal", "--n", "20"]
    args += ["--eps", "0", "--eps", "0.1", "--reps", "100", "--seed", "3", "-o", str(out), *extra]
    result = _invoke(*args)
    assert result.exit_code == 0, result.output
    return out.read_bytes()


def test_study_output_is_byte_identical_across_workers(tmp_path: Path) -> None:
    one = _study(tmp_path, "one.csv", "-w", "1")
    three = _study(tmp_path, "three.csv", "-w", "3")
    assert one == three
    lines = one.decode().splitlines()
    assert lines[0] == "# schema=1"
    assert lines[1] == "estimator,distribution,n,epsilon,bias,se,rmse,mc_se,replicates"
    assert [line.split(",")[0] for line in lines[2:]] == ["hsm", "median", "hsm", "median"]


def test_study_json_format(tmp_path: Path) -> None:
    payload = json.loads(_study(tmp_path, "study.json", "--format", "json"))
    assert payload["schema"] == 1
    assert len(payload["results"]) == 4


def test_mstudy_rows(tmp_path: Path) -> None:
    out = tmp_path / "m.csv"
    result = _invoke(
        "mstudy", "--scenario", "b", "--scenario", "d", "--n", "20", "--eps", "0",
        "--reps", "100", "-o", str(out),
    )
    assert result.exit_code == 0, result.output
    rows = out.read_text().splitlines()[2:]
    assert [r.split(",")[0] for r in rows] == ["m_b", "m_d"]


def test_ssc_json_and_csv(tmp_path: Path) -> None:
    out = tmp_path / "ssc.json"
    result = _invoke("ssc", "--n", "20", "--points", "21", "--format", "json", "-o", str(out))
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text())
    assert payload["summary"]["estimator"] == "hsm"
    assert payload["summary"]["points"] == len(payload["curve"]) == 41
    csv_out = tmp_path / "ssc.csv"
    result = _invoke("ssc", "-e", "median", "--n", "20", "--points", "21", "-o", str(csv_out))
    assert result.exit_code == 0, result.output
    assert csv_out.read_text().splitlines()[1] == "estimator,distribution,n,x,S"


def test_bootstrap_city(tmp_path: Path) -> None:
    out = tmp_path / "boot.json"
    result = _invoke("bootstrap", "--city", "x", "--b", "200", "--seed", "1", "-o", str(out))
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text())
    assert payload["estimate"] == 50.0
    assert payload["n"] == 49
    assert payload["modal_skewness"] == pytest.approx(1 - 7 / 49)
    again = tmp_path / "again.json"
    _invoke("bootstrap", "--city", "x", "--b", "200", "--seed", "1", "-o", str(again))
    assert again.read_bytes() == out.read_bytes()


def test_vertex_with_fixed_parameter(tmp_path: Path) -> None:
    out = tmp_path / "vertex.csv"
    result = _invoke("vertex", "-e", "fsmw", "--p", "0.06", "--events", "100", "-o", str(out))
    assert result.exit_code == 0, result.output
    rows = out.read_text().splitlines()
    assert rows[1].startswith("estimator,parameter,best_value")
    assert rows[2].startswith("fsmw,p,0.06,")


def test_bench_rows(tmp_path: Path) -> None:
    out = tmp_path / "bench.json"
    result = _invoke(
        "bench", "-e", "hsm", "--dist", "normal", "--n", "50", "--calls", "2",
        "--format", "json", "-o", str(out),
    )
    assert result.exit_code == 0, result.output
    (row,) = json.loads(out.read_text())["results"]
    assert row["estimator"] == "hsm"
    assert row["calls"] == 2


def test_config_output_path_is_default_target(tmp_path: Path) -> None:
    target = tmp_path / "from_config.json"
    result = _invoke("estimate", "--city", "x", "-c", f"run.output_path={target}")
    assert result.exit_code == 0, result.output
    assert json.loads(target.read_text())["value"] == 50.0
    flagged = tmp_path / "from_flag.json"
    result = _invoke("estimate", "--city", "x", "-c", f"run.output_path={target}", "-o", str(flagged))
    assert result.exit_code == 0, result.output
    assert flagged.exists()
