import json

import numpy as np
import pytest

from boolgrain.harness import (
    ConfigError,
    ExperimentConfig,
    load_config,
    run_charlier_check,
    run_clt_test,
    run_condition_check,
    run_covariance,
    run_experiment,
    run_hyperplane_test,
    run_limit_test,
    run_render,
)
from boolgrain.cli import main as cli_main


def write_cfg(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def pareto_cfg(**over):
    cfg = {
        "name": "t1",
        "model": {"family": "homothetic", "base": "unit-ball",
                  "R": {"kind": "pareto", "alpha": 1.5, "xm": 1.0 / 6.0}, "nu": 1},
        "window": {"shape": "box", "lengths": [1.0]},
        "lambdas": [20.0, 40.0],
        "replications": 120,
        "k_levels": [1],
        "n_pts": 1500,
        "seed": 5,
    }
    cfg.update(over)
    return cfg


def const_cfg(**over):
    cfg = pareto_cfg(**over)
    cfg["model"] = {"family": "homothetic", "base": "unit-ball",
                    "R": {"kind": "constant", "xm": 0.5}, "nu": 1}
    return cfg


# --------------------------------------------------------------------------
# config parsing and refusals
# --------------------------------------------------------------------------

def test_config_roundtrip(tmp_path):
    path = write_cfg(tmp_path, "a.json", pareto_cfg())
    cfg = load_config(path, kind="limit-test")
    assert cfg.kind == "limit-test"
    assert cfg.model.law.alpha == 1.5
    assert cfg.lambdas == (20.0, 40.0)


def test_config_kind_conflict(tmp_path):
    path = write_cfg(tmp_path, "a.json", pareto_cfg(kind="clt-test"))
    with pytest.raises(ConfigError):
        load_config(path, kind="limit-test")


def test_config_bad_ladder(tmp_path):
    path = write_cfg(tmp_path, "a.json", pareto_cfg(lambdas=[50, 50]))
    with pytest.raises(ConfigError):
        load_config(path, kind="limit-test")


def test_refusal_clt_on_heavy_tail(tmp_path):
    cfg = ExperimentConfig.from_json(pareto_cfg(), kind="clt-test")
    with pytest.raises(ConfigError):
        run_clt_test(cfg)


def test_refusal_limit_on_bounded_law():
    cfg = ExperimentConfig.from_json(const_cfg(), kind="limit-test")
    with pytest.raises(ConfigError):
        run_limit_test(cfg)


def test_refusal_limit_on_xiex1():
    obj = pareto_cfg()
    obj["model"] = {"family": "rect-xiex1",
                    "R": {"kind": "pareto", "alpha": 1.5, "xm": 1.0}, "nu": 2}
    obj["window"] = {"shape": "box", "lengths": [1.0, 1.0]}
    cfg = ExperimentConfig.from_json(obj, kind="limit-test")
    with pytest.raises(ConfigError):
        run_limit_test(cfg)


def test_refusal_hyperplane_on_boundary_alpha():
    obj = pareto_cfg()
    obj["model"]["nu"] = 2
    obj["model"]["R"]["alpha"] = 1.505  # within 0.02 of 1 + nu0/nu = 1.5
    obj["window"] = {"shape": "box", "lengths": [1.0, 0.2]}
    obj["hyperplane"] = {"nu0": 1, "lengths": [1.0]}
    cfg = ExperimentConfig.from_json(obj, kind="hyperplane-test")
    with pytest.raises(ConfigError):
        run_hyperplane_test(cfg)


def test_refusal_condition_check_short_grid():
    cfg = ExperimentConfig.from_json(pareto_cfg(lam_grid=[2.0, 3.0, 4.0]),
                                     kind="condition-check")
    with pytest.raises(ConfigError):
        run_condition_check(cfg)


def test_refusal_too_few_replications():
    cfg = ExperimentConfig.from_json(pareto_cfg(replications=50), kind="limit-test")
    with pytest.raises(ConfigError):
        run_limit_test(cfg)


# --------------------------------------------------------------------------
# reproducibility
# --------------------------------------------------------------------------

def _run_cli(tmp_path, kind, cfg_obj, outname, threads=1, extra=()):
    cfg_path = write_cfg(tmp_path, f"{outname}.json", cfg_obj)
    out = tmp_path / outname
    rc = cli_main([kind, "--config", cfg_path, "--out", str(out),
                   "--threads", str(threads), "--no-figures", *extra])
    return rc, out


def test_byte_identical_rerun_and_thread_count(tmp_path):
    cfg = pareto_cfg()
    rc1, out1 = _run_cli(tmp_path, "limit-test", cfg, "run1", threads=1)
    rc2, out2 = _run_cli(tmp_path, "limit-test", cfg, "run2", threads=1)
    rc3, out3 = _run_cli(tmp_path, "limit-test", cfg, "run3", threads=2)
    for name in ("replications.csv", "summary.csv"):
        b1 = (out1 / name).read_bytes()
        assert b1 == (out2 / name).read_bytes()
        assert b1 == (out3 / name).read_bytes()


def test_seed_override_changes_output(tmp_path):
    cfg = pareto_cfg()
    _, out1 = _run_cli(tmp_path, "limit-test", cfg, "s1")
    _, out2 = _run_cli(tmp_path, "limit-test", cfg, "s2", extra=("--seed", "99"))
    assert (out1 / "replications.csv").read_bytes() != (out2 / "replications.csv").read_bytes()


def test_replication_csv_schema(tmp_path):
    rc, out = _run_cli(tmp_path, "limit-test", pareto_cfg(), "schema")
    header = (out / "replications.csv").read_text().splitlines()[0]
    assert header == "experiment,replication,lambda,k,nu0,estimate,se,n_pts,seed"


def test_exit_code_2_on_bad_config(tmp_path):
    cfg_path = write_cfg(tmp_path, "bad.json", {"model": {"family": "nope"}})
    rc = cli_main(["limit-test", "--config", cfg_path, "--out", str(tmp_path / "x")])
    assert rc == 2


# --------------------------------------------------------------------------
# condition-check verdicts (fast grids)
# --------------------------------------------------------------------------

def _cond_cfg(model, expected, grid=(3.0, 4.5, 6.75, 10.125, 15.2)):
    return ExperimentConfig.from_json({
        "name": "cond", "model": model, "lam_grid": list(grid),
        "quad_budget": 200_000, "seed": 3, "expected_verdict": expected,
        "window": {"shape": "box", "lengths": [1.0] * model["nu"]},
    }, kind="condition-check")


def test_condition_check_ball_passes():
    model = {"family": "homothetic", "base": "unit-ball",
             "R": {"kind": "pareto", "alpha": 1.5, "xm": 1.0}, "nu": 2}
    table = run_condition_check(_cond_cfg(model, "PASS"))
    assert table.passed
    row = table.summary[0]
    assert row["verdict"] == "PASS"
    assert abs(row["slope"] - (-1.0)) < 0.1
    assert row["threshold"] == pytest.approx(-2.0 / 3.0)


def test_condition_check_xiex1_fails():
    model = {"family": "rect-xiex1",
             "R": {"kind": "pareto", "alpha": 1.5, "xm": 1.0}, "nu": 2}
    table = run_condition_check(_cond_cfg(model, "FAIL"))
    assert table.passed  # expectation FAIL matched
    assert table.summary[0]["verdict"] == "FAIL"
    assert abs(table.summary[0]["slope"] - (-0.5)) < 0.05


def test_condition_check_xiex2_both_sides():
    for p, alpha, want in ((0.6, 1.3, "PASS"), (0.8, 1.3, "FAIL")):
        model = {"family": "rect-xiex2", "p": p,
                 "R": {"kind": "pareto", "alpha": alpha, "xm": 1.0}, "nu": 2}
        table = run_condition_check(_cond_cfg(model, want))
        assert table.summary[0]["verdict"] == want
        assert table.passed


# --------------------------------------------------------------------------
# other runners, smoke level
# --------------------------------------------------------------------------

def test_run_clt_smoke():
    cfg = ExperimentConfig.from_json(const_cfg(replications=300, lambdas=[30.0, 60.0]),
                                     kind="clt-test")
    table = run_clt_test(cfg)
    rows = table.summary
    assert all(r["unbiased_pass"] for r in rows)
    assert rows[-1]["variance_ratio"] is not None


def test_run_covariance_smoke():
    cfg = ExperimentConfig.from_json({
        "name": "cov",
        "model": {"family": "homothetic", "base": "unit-ball",
                  "R": {"kind": "constant", "xm": 0.5}, "nu": 1},
        "window": {"shape": "box", "lengths": [1.0]},
        "lambdas": [15.0],
        "separations": [0.0, 0.4, 0.8, 1.4],
        "cov_replications": 1500,
        "quad_budget": 20000,
        "seed": 2,
    }, kind="covariance")
    table = run_covariance(cfg)
    assert table.passed, table.notes
    r0 = [r for r in table.summary if r["quantity"] == "r_X" and r["separation"] == 0.0][0]
    assert r0["value"] == pytest.approx(1.0, rel=1e-6)  # mu = 2 * 0.5


def test_run_charlier_check():
    cfg = ExperimentConfig.from_json({
        "name": "ch", "model": {"family": "homothetic", "base": "unit-ball",
                                "R": {"kind": "constant", "xm": 1.0}, "nu": 1},
        "mu_values": [0.5, 1.0],
    }, kind="charlier-check")
    table = run_charlier_check(cfg)
    assert table.passed


def test_run_render(tmp_path):
    cfg = ExperimentConfig.from_json({
        "name": "rend",
        "model": {"family": "homothetic",
                  "base": {"kind": "lilypond", "intensity": 3.0},
                  "R": {"kind": "pareto", "alpha": 1.5, "xm": 0.5}, "nu": 2},
        "window": {"shape": "box", "lengths": [1.0, 1.0]},
        "lambdas": [8.0],
        "k_levels": [1, 2],
        "resolution": 96,
        "seed": 4,
    }, kind="render")
    table = run_render(cfg, out_dir=str(tmp_path))
    assert table.passed
    assert (tmp_path / "field_lam8.pgm").exists()
    assert (tmp_path / "field_lam8_k1.pgm").exists()
    # k=2 shading is a subset of k=1
    def load(pth):
        data = pth.read_bytes().split(b"255\n", 1)[1]
        return np.frombuffer(data, dtype=np.uint8)
    b1 = load(tmp_path / "field_lam8_k1.pgm")
    b2 = load(tmp_path / "field_lam8_k2.pgm")
    assert np.all(b1[b2 > 0] > 0)


def test_figures_written(tmp_path):
    cfg = ExperimentConfig.from_json(pareto_cfg(), kind="limit-test")
    table = run_experiment(cfg, str(tmp_path / "figs"), threads=1, figures=True)
    assert (tmp_path / "figs" / "fig_cdf.png").exists()
    assert (tmp_path / "figs" / "fig_distance_trend.png").exists()


# --------------------------------------------------------------------------
# hyperplane reduction at nu0 = nu
# --------------------------------------------------------------------------

def test_hyperplane_nu0_eq_nu_matches_limit_test():
    obj = pareto_cfg(name="shared")
    obj["model"]["nu"] = 1
    hyp = dict(obj)
    hyp["hyperplane"] = {"nu0": 1, "lengths": [1.0]}
    cfg_lim = ExperimentConfig.from_json(obj, kind="limit-test")
    cfg_hyp = ExperimentConfig.from_json(hyp, kind="hyperplane-test")
    t1 = run_limit_test(cfg_lim)
    t2 = run_hyperplane_test(cfg_hyp)
    for a, b in zip(t1.summary, t2.summary):
        for key in ("lambda", "k", "mean_estimate", "ks", "cf", "alpha_hat"):
            assert a[key] == b[key]


def test_single_lambda_ladder_has_no_trend_field():
    cfg = ExperimentConfig.from_json(pareto_cfg(lambdas=[25.0]), kind="limit-test")
    table = run_limit_test(cfg)
    assert all(r["cf_trend"] == "" for r in table.summary)


def test_refusal_totality_more_mismatches():
    rect = {"family": "rect-xiex1",
            "R": {"kind": "pareto", "alpha": 1.5, "xm": 1.0}, "nu": 2}
    cfg = ExperimentConfig.from_json({
        "name": "x", "model": rect, "window": {"shape": "box", "lengths": [1, 1]},
        "lambdas": [10.0]}, kind="covariance")
    with pytest.raises(ConfigError):
        run_covariance(cfg)
    nu1 = {"family": "homothetic", "base": "unit-ball",
           "R": {"kind": "constant", "xm": 1.0}, "nu": 1}
    cfg2 = ExperimentConfig.from_json({
        "name": "x", "model": nu1, "window": {"shape": "box", "lengths": [1.0]},
        "lambdas": [10.0]}, kind="render")
    with pytest.raises(ConfigError):
        run_render(cfg2, out_dir=".")
    cfg3 = ExperimentConfig.from_json(pareto_cfg(), kind="hyperplane-test")
    with pytest.raises(ConfigError):
        run_hyperplane_test(cfg3)


def test_germ_retention_bound():
    # stored germs sit within the stated over-inclusive envelopes: ball
    # windows use |u| <= r_W + rho, box windows the per-axis box bound
    import numpy as np
    from boolgrain.field import Window, simulate_realization
    from boolgrain.grains import GrainModel
    model = GrainModel.from_json({"family": "homothetic", "base": "unit-ball",
                                  "R": {"kind": "pareto", "alpha": 1.5, "xm": 0.3},
                                  "nu": 2})
    rng = np.random.default_rng(12)
    wb = Window("ball", 2, 8.0, radius=1.0)
    rz = simulate_realization(model, wb, rng)
    assert np.all(np.linalg.norm(rz.u, axis=1) <= wb.circumradius + rz.rho + 1e-9)
    wx = Window("box", 2, 8.0, lengths=(1.0, 1.0))
    rz2 = simulate_realization(model, wx, rng)
    hw = wx.halfwidths
    assert np.all(np.abs(rz2.u) <= hw[None, :] + rz2.rho[:, None] + 1e-9)
    assert np.all(np.linalg.norm(rz2.u, axis=1)
                  <= wx.circumradius + np.sqrt(2.0) * rz2.rho + 1e-9)
