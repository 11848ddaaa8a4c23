import json
import subprocess
import sys

import pytest

from kneser_lab import experiments
from kneser_lab.cli import main
from kneser_lab.core import Params
from kneser_lab.model import SampledHypergraph, make_sample


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------------
# quantities

def test_quantities_reports_closed_forms(capsys):
    code, out, _ = run_cli(capsys, "quantities", "--n", "10", "--k", "2", "--r", "2")
    assert code == 0
    d = json.loads(out)
    assert d["num_vertices"] == 45
    assert d["trivial_size"] == 9
    assert d["trivial_plus_one_edges"] == 7


def test_quantities_with_p_adds_expectations(capsys):
    code, out, _ = run_cli(capsys, "quantities", "--n", "10", "--k", "2",
                           "--r", "2", "--p", "0.1")
    assert code == 0
    d = json.loads(out)
    assert abs(d["expected_Y"] - 360 * 0.9**7) < 1e-9
    assert d["p_over_pc"] == pytest.approx(0.1 / d["p_critical"])


def test_quantities_rejects_bad_p(capsys):
    code, _, err = run_cli(capsys, "quantities", "--n", "10", "--k", "2",
                           "--r", "2", "--p", "1.5")
    assert code == 2
    assert "error:" in err


def test_quantities_rejects_bad_params(capsys):
    code, _, err = run_cli(capsys, "quantities", "--n", "3", "--k", "2", "--r", "2")
    assert code == 2
    assert "error:" in err


def test_quantities_writes_out_file(capsys, tmp_path):
    path = tmp_path / "q.json"
    code, out, _ = run_cli(capsys, "quantities", "--n", "10", "--k", "2",
                           "--r", "2", "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["num_vertices"] == 45


# ----------------------------------------------------------------------------
# sample / alpha / ystat pipeline

def test_sample_alpha_ystat_pipeline(capsys, tmp_path):
    spath = tmp_path / "sample.json"
    code, _, _ = run_cli(capsys, "sample", "--n", "6", "--k", "2", "--r", "2",
                         "--p", "0.3", "--seed", "12345", "--out", str(spath))
    assert code == 0
    stored = SampledHypergraph.from_json(spath.read_text())
    direct = make_sample(Params(6, 2, 2), 0.3, 12345)
    assert stored.to_json() == direct.to_json()

    code, out, _ = run_cli(capsys, "alpha", "--in", str(spath))
    assert code == 0
    d = json.loads(out)
    assert d["status"] == "exact"
    assert d["alpha"] == len(d["witness"])

    code, out, _ = run_cli(capsys, "ystat", "--in", str(spath))
    assert code == 0
    y = json.loads(out)
    assert y["y"] == experiments.y_statistic(direct)
    assert y["pairs_total"] == 60
    assert y["trivial_size"] == 5
    if y["y"] > 0:
        assert y["first_witness"] is not None


def test_sample_sampler_spellings_agree(capsys, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run_cli(capsys, "sample", "--n", "6", "--k", "2", "--r", "2",
            "--p", "0.4", "--seed", "9", "--sampler", "by-count", "--out", str(a))
    run_cli(capsys, "sample", "--n", "6", "--k", "2", "--r", "2",
            "--p", "0.4", "--seed", "9", "--sampler", "by_count", "--out", str(b))
    assert a.read_text() == b.read_text()


def test_alpha_missing_file_is_a_clean_error(capsys):
    code, _, err = run_cli(capsys, "alpha", "--in", "/nonexistent/sample.json")
    assert code == 2
    assert "error:" in err


# ----------------------------------------------------------------------------
# sweep

def sweep_config_dict():
    return {
        "params": {"n": 6, "k": 2, "r": 2},
        "p_grid": [0.2, 0.6],
        "trials_per_p": 8,
        "master_seed": 5,
    }


def test_sweep_writes_json_and_csv(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(sweep_config_dict()))
    out = tmp_path / "result.json"
    csv = tmp_path / "rows.csv"
    code, _, _ = run_cli(capsys, "sweep", "--config", str(cfg),
                         "--out", str(out), "--csv", str(csv))
    assert code == 0
    d = json.loads(out.read_text())
    assert len(d["rows"]) == 2
    lines = csv.read_text().strip().split("\n")
    assert lines[0].startswith("p,trials,n_alpha_eq_N,")
    assert len(lines) == 3


def test_sweep_rejects_unknown_config_key(capsys, tmp_path):
    bad = sweep_config_dict()
    bad["tyops"] = True
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(bad))
    code, _, err = run_cli(capsys, "sweep", "--config", str(cfg))
    assert code == 2
    assert "error:" in err


def test_sweep_env_var_overrides_threads(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(sweep_config_dict()))
    out1 = tmp_path / "one.json"
    out2 = tmp_path / "two.json"
    run_cli(capsys, "sweep", "--config", str(cfg), "--out", str(out1))
    monkeypatch.setenv("KNESER_LAB_THREADS", "2")
    run_cli(capsys, "sweep", "--config", str(cfg), "--threads", "1",
            "--out", str(out2))
    assert out1.read_text() == out2.read_text()


# ----------------------------------------------------------------------------
# extremal

def test_extremal_subcommand(capsys):
    code, out, _ = run_cli(capsys, "extremal", "--n", "6", "--k", "2",
                           "--r", "2", "--s", "6")
    assert code == 0
    d = json.loads(out)
    assert d["lex_edges"] == 3
    assert d["min_attained_by_lex"] is True
    assert d["partial"] is False


# ----------------------------------------------------------------------------
# verify

def test_verify_fast_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--fast")
    assert code == 0
    d = json.loads(out)
    assert d["all_passed"] is True


def test_verify_exits_one_on_failure(capsys, monkeypatch):
    monkeypatch.setattr(experiments, "_m_reference", lambda params: 0)
    code, out, _ = run_cli(capsys, "verify", "--fast")
    assert code == 1
    assert json.loads(out)["all_passed"] is False


# ----------------------------------------------------------------------------
# module entry point

def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "kneser_lab", "quantities",
         "--n", "6", "--k", "2", "--r", "2"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["num_vertices"] == 15
