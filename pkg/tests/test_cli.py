"""CLI config parsing, command dispatch, output formats and determinism."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from gaussmet.cli import (
    ConfigError,
    dumps_json,
    flatten_document,
    format_float,
    load_config,
    main,
    render_csv,
    run,
)

BALANCED_OMEGA = math.pi / 4


def write_config(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def compute_config():
    return {
        "probe": {"family": "tmss", "r": 0.5},
        "params": {"omega": BALANCED_OMEGA},
    }


def sweep_config():
    return {
        "sweep": {"family": "tmss", "variable": "N", "grid": [10, 100, 1000]},
        "budget": {"n_s": 1, "n_c": 1},
        "params": {"omega": BALANCED_OMEGA},
    }


def test_format_float_seventeen_digits():
    assert format_float(math.pi) == "3.1415926535897931"
    assert float(format_float(1 / 3)) == 1 / 3
    assert format_float(float("inf")) == "inf"
    assert format_float(float("nan")) == "nan"


def test_json_emitter_round_trips():
    doc = {"a": [1.5, 2, True, None], "b": {"c": "text", "d": []}, "m": np.eye(2)}
    parsed = json.loads(dumps_json(doc))
    assert parsed["a"] == [1.5, 2, True, None]
    assert parsed["m"] == [[1.0, 0.0], [0.0, 1.0]]


def test_json_emitter_nonfinite_becomes_null():
    assert json.loads(dumps_json({"x": float("inf")}))["x"] is None


def test_render_csv_and_flatten():
    text = render_csv(("a", "b"), [[1, True], [0.5, False]])
    assert text.splitlines()[0] == "a,b"
    assert text.splitlines()[1] == "1,true"
    flat = flatten_document({"x": {"y": [1, 2]}, "z": 3})
    assert flat == [("x.y.0", 1), ("x.y.1", 2), ("z", 3)]


def test_compute_reproduces_covariance_diagonal(tmp_path, capsys):
    path = write_config(tmp_path, "c.json", compute_config())
    assert main(["compute", "--config", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema_version"] == "1"
    sh2 = math.sinh(1.0) ** 2
    diag = [doc["qfim"]["covariance"][k][k] for k in range(4)]
    assert diag == pytest.approx([8 * sh2, 0.0, 2 * sh2, 8 * sh2], abs=1e-10)
    assert doc["closed_form_comparison"]["covariance_max_abs_dev"] < 1e-9
    assert doc["bounds"]["singular"] is True  # no displacement: phi unidentifiable


def test_sweep_csv_contract(tmp_path, capsys):
    path = write_config(tmp_path, "s.json", sweep_config())
    assert main(["sweep", "--config", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    header = lines[0].split(",")
    assert header[:7] == [
        "N",
        "tr_inv",
        "bound_phi0",
        "bound_phi",
        "bound_psi",
        "bound_omega",
        "singular",
    ]
    assert header[7:] == ["eig1", "eig2", "eig3", "eig4"]
    assert len(lines) == 4
    first = lines[1].split(",")
    assert float(first[0]) == 10.0
    assert first[6] == "false"


def test_sweep_json_format(tmp_path, capsys):
    path = write_config(tmp_path, "s.json", sweep_config())
    assert main(["sweep", "--config", path, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["columns"][0] == "N"
    assert len(doc["rows"]) == 3


def test_degrees_toggle(tmp_path, capsys):
    cfg = compute_config()
    cfg["degrees"] = True
    cfg["params"]["omega"] = 45.0
    path = write_config(tmp_path, "deg.json", cfg)
    assert main(["compute", "--config", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["params"]["omega"] == pytest.approx(math.pi / 4)


def test_equivalence_and_optimize_commands(tmp_path, capsys):
    eq = {
        "equivalence": {"r": 0.5},
        "budget": {"n_s": 50, "n_c": 50},
        "params": {"omega": math.pi / 3},
    }
    path = write_config(tmp_path, "eq.json", eq)
    assert main(["equivalence", "--config", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["covariance_dev"] < 1e-10
    assert doc["budget_total_rel_dev"] < 0.05
    assert doc["displacement_phase_preference"]["winner"] == "beta_quarter_zero"

    opt = {
        "optimize": {"family": "tmss", "free": ["theta", "tau"]},
        "budget": {"n_s": 2.5, "n_c": 2.5},
        "params": {"omega": BALANCED_OMEGA},
    }
    path = write_config(tmp_path, "opt.json", opt)
    assert main(["optimize", "--config", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_singular"] is False
    assert doc["config"]["tau"] == pytest.approx(0.5, abs=1e-3)
    assert doc["trace"][0]["stage"] == "coarse"


def test_oracle_check_command(tmp_path, capsys):
    cfg = {
        "oracle": {
            "r_values": [0.2, 0.3],
            "omega_values": [0.6],
            "alpha1_mag": 0.3,
            "alpha2_mag": 0.3,
            "tol": 1e-8,
        },
        "params": {"phi0": 0.3, "phi": 0.7, "psi": 1.1, "omega": 0.5},
    }
    path = write_config(tmp_path, "o.json", cfg)
    assert main(["oracle-check", "--config", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["grid"]) == 2
    cov = doc["summary"]["covariance_ratio"]
    disp = doc["summary"]["displacement_ratio"]
    assert cov["mean"] == pytest.approx(0.5, abs=1e-3)
    assert disp["mean"] == pytest.approx(1.0, abs=1e-3)
    assert cov["spread"] < 0.01 and disp["spread"] < 0.01


def test_output_file_and_metadata_sidecar(tmp_path):
    cfg_path = write_config(tmp_path, "c.json", compute_config())
    out = tmp_path / "result.json"
    assert main(["compute", "--config", cfg_path, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["command"] == "compute"
    meta = json.loads((tmp_path / "result.json.meta.json").read_text())
    assert meta["tool"] == "gaussmet"
    assert "created_utc" in meta
    assert "created_utc" not in out.read_text()


def test_stdin_config(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "gaussmet.cli", "compute", "--config", "-"],
        input=json.dumps(compute_config()),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "compute"


def test_config_errors_name_offending_key(tmp_path, capsys):
    cases = [
        ({"params": {"omega": 0.5}}, "probe"),
        ({"probe": {"family": "tmss"}, "params": {}}, "params.omega"),
        ({"probe": {"family": "tmss", "bad": 1}, "params": {"omega": 0.5}}, "probe.bad"),
        ({"probe": {"family": "nope"}, "params": {"omega": 0.5}}, "probe.family"),
        ({"probe": {"family": "tmss"}, "params": {"omega": 0.5}, "extra": 1}, "extra"),
    ]
    for payload, key in cases:
        path = write_config(tmp_path, "bad.json", payload)
        assert main(["compute", "--config", path]) == 2
        assert key in capsys.readouterr().err


def test_malformed_json_and_missing_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    assert main(["compute", "--config", str(path)]) == 2
    assert main(["compute", "--config", str(tmp_path / "absent.json")]) == 2


def test_command_mismatch_rejected(tmp_path):
    cfg = compute_config()
    cfg["command"] = "sweep"
    path = write_config(tmp_path, "c.json", cfg)
    assert main(["compute", "--config", path]) == 2


def test_numerical_failure_exit_code(tmp_path, capsys):
    cfg = {"probe": {"family": "tmss", "r": 7.5}, "params": {"omega": 0.5}}
    path = write_config(tmp_path, "hot.json", cfg)
    assert main(["compute", "--config", path]) == 3
    assert "numerical" in capsys.readouterr().err


def test_cutoff_overflow_exit_code(tmp_path, capsys):
    cfg = {
        "oracle": {
            "r_values": [1.2],
            "omega_values": [0.5],
            "tol": 1e-8,
            "max_cutoff": 4,
        },
        "params": {"omega": 0.5},
    }
    path = write_config(tmp_path, "ovf.json", cfg)
    assert main(["oracle-check", "--config", path]) == 4
    assert "cutoff" in capsys.readouterr().err


def test_load_config_rejects_non_object():
    with pytest.raises(ConfigError):
        load_config("compute", "[1, 2]")


def test_run_outputs_both_formats():
    cfg = load_config("compute", json.dumps(compute_config()))
    json_text, csv_text = run(cfg)
    assert json.loads(json_text)["command"] == "compute"
    lines = csv_text.splitlines()
    assert lines[0] == "key,value"
    assert any(line.startswith("qfim.covariance.0.0,") for line in lines)
