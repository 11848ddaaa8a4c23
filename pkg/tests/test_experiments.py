import json
import math

import pytest

from kneser_lab.core import Params, binomial, p_critical, star_union_size
from kneser_lab import experiments as ex
from kneser_lab import model


def wilson_reference(s, t, z=1.96):
    # textbook score interval, written independently of the library route
    phat = s / t
    denom = 1 + z * z / t
    center = phat + z * z / (2 * t)
    margin = z * math.sqrt(phat * (1 - phat) / t + z * z / (4 * t * t))
    return (center - margin) / denom, (center + margin) / denom


# ----------------------------------------------------------------------------
# confidence intervals

@pytest.mark.parametrize("s,t", [(0, 10), (3, 10), (8, 10), (10, 10), (1, 1)])
def test_wilson_matches_reference(s, t):
    lo, hi = ex.wilson_interval(s, t)
    rlo, rhi = wilson_reference(s, t)
    assert math.isclose(lo, rlo, rel_tol=1e-12, abs_tol=1e-15)
    assert math.isclose(hi, rhi, rel_tol=1e-12, abs_tol=1e-15)
    assert 0.0 <= lo <= s / t <= hi <= 1.0


def test_wilson_validation():
    with pytest.raises(ValueError):
        ex.wilson_interval(0, 0)
    with pytest.raises(ValueError):
        ex.wilson_interval(5, 3)
    with pytest.raises(ValueError):
        ex.wilson_interval(-1, 3)


# ----------------------------------------------------------------------------
# sweep configuration

def make_config(**overrides):
    base = dict(params=Params(6, 2, 2), p_grid=(0.1, 0.4), trials_per_p=5,
                master_seed=7)
    base.update(overrides)
    return ex.SweepConfig(**base)


def test_config_round_trips_through_json():
    cfg = make_config(mode="y_only", sampler_kind="by_count")
    assert ex.SweepConfig.from_json_dict(cfg.to_json_dict()) == cfg


def test_config_validation():
    with pytest.raises(ValueError):
        make_config(p_grid=(0.4, 0.1))
    with pytest.raises(ValueError):
        make_config(p_grid=(0.1, 1.4))
    with pytest.raises(ValueError):
        make_config(trials_per_p=0)
    with pytest.raises(ValueError):
        make_config(master_seed=1 << 64)
    with pytest.raises(ValueError):
        make_config(mode="bogus")
    with pytest.raises(ValueError):
        make_config(sampler_kind="bogus")


def test_config_rejects_unknown_json_keys():
    d = make_config().to_json_dict()
    d["surprise"] = 1
    with pytest.raises(ValueError):
        ex.SweepConfig.from_json_dict(d)
    d2 = make_config().to_json_dict()
    d2["params"]["surprise"] = 1
    with pytest.raises(ValueError):
        ex.SweepConfig.from_json_dict(d2)
    with pytest.raises(ValueError):
        ex.SweepConfig.from_json_dict({"params": {"n": 6, "k": 2, "r": 2}})


# ----------------------------------------------------------------------------
# single trials

def test_run_trial_is_deterministic():
    params = Params(6, 2, 2)
    a = ex.run_trial(params, 0.3, 12345)
    b = ex.run_trial(params, 0.3, 12345)
    assert a == b


def test_run_trial_modes():
    params = Params(6, 2, 2)
    seed = 12345
    both = ex.run_trial(params, 0.3, seed, mode="both")
    alpha_only = ex.run_trial(params, 0.3, seed, mode="alpha")
    y_only = ex.run_trial(params, 0.3, seed, mode="y_only")
    assert y_only.status == ex.STATUS_Y_ONLY
    assert y_only.alpha is None and y_only.solver_nodes == 0
    assert alpha_only.y is None
    assert both.y == y_only.y
    assert both.num_retained == alpha_only.num_retained == y_only.num_retained


def test_run_trial_positive_y_skips_the_solver():
    params = Params(6, 2, 2)
    rec = ex.run_trial(params, 0.3, 12345, mode="both")
    assert rec.y is not None and rec.y > 0
    assert rec.status == ex.STATUS_ALPHA_GT
    assert rec.alpha == star_union_size(params) + 1
    assert rec.solver_nodes == 0


def test_run_trial_agrees_with_y_statistic():
    params = Params(7, 2, 2)
    for seed in (1, 2, 3):
        rec = ex.run_trial(params, 0.4, seed, mode="both")
        sample = model.make_sample(params, 0.4, seed)
        assert rec.y == ex.y_statistic(sample)
        assert rec.num_retained == sample.num_retained


def test_run_trial_rejects_unknown_mode():
    with pytest.raises(ValueError):
        ex.run_trial(Params(6, 2, 2), 0.3, 1, mode="bogus")


def test_y_statistic_extremes():
    params = Params(6, 2, 2)
    empty = model.make_sample(params, 0.0, seed=1)
    # with nothing retained every (centers, outside) pair counts
    assert ex.y_statistic(empty) == binomial(6, 1) * binomial(5, 2)
    full = model.make_sample(params, 1.0, seed=1)
    assert ex.y_statistic(full) == 0


def test_trial_seeds_are_distinct():
    seeds = {
        ex.trial_seed_for(99, pi, ti)
        for pi in range(4) for ti in range(50)
    }
    assert len(seeds) == 200
    assert ex.trial_seed_for(99, 0, 0) == ex.trial_seed_for(99, 0, 0)
    assert ex.trial_seed_for(98, 0, 0) != ex.trial_seed_for(99, 0, 0)


# ----------------------------------------------------------------------------
# sweeps

def small_sweep_config(mode="both"):
    return ex.SweepConfig(params=Params(6, 2, 2), p_grid=(0.1, 0.4, 0.9),
                          trials_per_p=20, master_seed=31, mode=mode)


def test_sweep_row_invariants():
    cfg = small_sweep_config()
    res = ex.threshold_sweep(cfg)
    assert res.num_vertices == 15
    assert res.trivial_size == 5
    assert math.isclose(res.p_critical, p_critical(cfg.params))
    assert len(res.rows) == 3
    pairs = binomial(6, 1) * binomial(5, 2)
    for row, p in zip(res.rows, cfg.p_grid):
        assert row["p"] == p
        assert row["trials"] == 20
        assert row["n_alpha_eq_N"] + row["n_alpha_gt_N"] + row["n_budget"] == 20
        if row["n_budget"] < 20:
            assert 0.0 <= row["wilson_lo"] <= row["frac_success"] <= row["wilson_hi"] <= 1.0
        if row["n_budget"] == 0:
            assert 5 <= row["mean_alpha"] <= 6
        assert math.isclose(row["expected_Y"], pairs * (1 - p) ** 3)
        assert math.isclose(row["p_over_pc"], p / res.p_critical)


def test_sweep_success_fraction_rises_with_p():
    res = ex.threshold_sweep(small_sweep_config())
    fracs = [row["frac_success"] for row in res.rows]
    # retained edges accumulate with p and pin alpha down to N
    assert fracs == sorted(fracs)
    assert fracs[0] == 0.0
    assert fracs[-1] >= 0.9


def test_sweep_y_only_mode_blanks_alpha_columns():
    res = ex.threshold_sweep(small_sweep_config(mode="y_only"))
    for row in res.rows:
        assert row["n_alpha_eq_N"] is None
        assert row["frac_success"] is None
        assert row["mean_alpha"] is None
        assert row["mean_Y"] is not None


def test_sweep_alpha_mode_blanks_y_columns():
    res = ex.threshold_sweep(small_sweep_config(mode="alpha"))
    for row in res.rows:
        assert row["mean_Y"] is None
        assert row["frac_success"] is not None


def test_sweep_csv_shape():
    res = ex.threshold_sweep(small_sweep_config(mode="y_only"))
    lines = res.to_csv().strip().split("\n")
    assert lines[0] == ("p,trials,n_alpha_eq_N,frac_success,wilson_lo,"
                        "wilson_hi,mean_alpha,mean_Y,expected_Y,p_over_pc")
    assert len(lines) == 4
    first = lines[1].split(",")
    assert first[0] == "0.1"
    assert first[2] == "" and first[3] == ""  # alpha columns blank in y_only


def test_sweep_is_reproducible_and_thread_invariant():
    cfg = small_sweep_config()
    one = ex.threshold_sweep(cfg, threads=1)
    again = ex.threshold_sweep(cfg, threads=1)
    pooled = ex.threshold_sweep(cfg, threads=2)
    as_json = lambda r: json.dumps(r.to_json_dict(), sort_keys=True)
    assert as_json(one) == as_json(again) == as_json(pooled)
    assert one.to_csv() == pooled.to_csv()


def test_sweep_json_round_trip_keeps_config():
    res = ex.threshold_sweep(small_sweep_config())
    d = res.to_json_dict()
    assert ex.SweepConfig.from_json_dict(d["config"]) == res.config


# ----------------------------------------------------------------------------
# coupling

def test_coupled_indicators_never_flip_upward():
    out = ex.coupled_monotonicity_check(Params(7, 2, 2), [0.2, 0.5, 0.8],
                                        n_trials=6, master_seed=5)
    assert out["passed"] is True
    assert out["violations"] == []
    assert out["n_skipped_budget"] == 0
    assert out["n_trials"] == 6


def test_coupled_check_is_grid_order_insensitive():
    asc = ex.coupled_monotonicity_check(Params(7, 2, 2), [0.2, 0.5], 3, 5)
    desc = ex.coupled_monotonicity_check(Params(7, 2, 2), [0.5, 0.2], 3, 5)
    assert asc == desc


# ----------------------------------------------------------------------------
# the self-check suite

def test_verify_suite_fast_passes_and_is_stable():
    a = ex.verify_suite(fast=True, seed=0)
    b = ex.verify_suite(fast=True, seed=0)
    assert a["all_passed"] is True
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    names = [c["name"] for c in a["checks"]]
    assert len(names) == len(set(names)) == 10


def test_verify_suite_catches_a_wrong_edge_count_formula(monkeypatch):
    # the closed-form route is checked against brute-force counting; break
    # the closed form and the suite must notice
    monkeypatch.setattr(ex, "_m_reference", lambda params: 0)
    out = ex.verify_suite(fast=True, seed=0)
    assert out["all_passed"] is False
    bad = [c for c in out["checks"] if not c["passed"]]
    assert any(c["name"] == "m_oracle" for c in bad)
