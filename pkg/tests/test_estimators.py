import math

import numpy as np
import pytest
from scipy import integrate

from boolgrain.estimators import (
    EstimatorError,
    HyperplaneSpec,
    RescaleMode,
    TestFunction,
    alpha0_of,
    covariance_decay_check,
    covariance_rX,
    cXi,
    ell_direction,
    h_infinity,
    hyperplane_fraction,
    indicator_cov_from_rx,
    model_mu,
    rescale_stat,
    sigma2,
    slice_moment,
    volume_fraction,
    weighted_functional,
)
from boolgrain.field import Window, simulate_realization
from boolgrain.grains import GrainConfigError, GrainModel

SIGMA2_INTERVAL = math.exp(-2.0) * (2.0 * math.e - 4.0)  # interval grain, length 1


def disk_model(kind="constant", alpha=None, xm=1.0, nu=2):
    r = {"kind": kind, "xm": xm}
    if alpha is not None:
        r["alpha"] = alpha
    return GrainModel.from_json({"family": "homothetic", "base": "unit-ball",
                                 "R": r, "nu": nu})


def interval_model(xm=0.5):
    """nu=1 grain (-R, R); xm=0.5 gives the unit-length interval, mu = 1."""
    return disk_model(kind="constant", xm=xm, nu=1)


# --------------------------------------------------------------------------
# mu and p
# --------------------------------------------------------------------------

def test_model_mu_disk_constant():
    res = model_mu(disk_model())
    assert res.mu == pytest.approx(math.pi)
    assert res.p == pytest.approx(1 - math.exp(-math.pi))
    assert res.p == pytest.approx(0.95679, abs=1e-5)
    assert res.se == 0.0


def test_model_mu_disk_pareto():
    res = model_mu(disk_model(kind="pareto", alpha=1.5, xm=1.0))
    assert res.mu == pytest.approx(3.0 * math.pi)


def test_model_mu_rect():
    m = GrainModel.from_json({"family": "rect-xiex2", "p": 0.6,
                              "R": {"kind": "pareto", "alpha": 1.5, "xm": 1.0}, "nu": 2})
    assert model_mu(m).mu == pytest.approx(3.0)  # Leb = R


def test_model_mu_random_base_mc():
    m = GrainModel.from_json({
        "family": "homothetic", "base": {"kind": "lilypond", "intensity": 2.0},
        "R": {"kind": "constant", "xm": 1.0}, "nu": 2})
    rng = np.random.default_rng(0)
    r1 = model_mu(m, n_mc=500, rng=rng)
    assert r1.mu > 0 and r1.se > 0
    # SE shrinks like 1/sqrt(budget)
    r2 = model_mu(m, n_mc=8000, rng=np.random.default_rng(1))
    assert r2.se < r1.se / 2.5


# --------------------------------------------------------------------------
# volume fraction on the window
# --------------------------------------------------------------------------

def test_volume_fraction_zero_field():
    model = disk_model()
    w = Window("box", 2, 4.0, lengths=(1.0, 1.0))
    from boolgrain.field import Realization
    rz = Realization(model, w, np.zeros((0, 2)), np.zeros(0), np.zeros(0),
                     {"scale": np.zeros(0), "volume": np.zeros(0)})
    e = volume_fraction(rz, 1, 500, np.random.default_rng(0))
    assert e.value == 0.0 and e.se == 0.0


def test_volume_fraction_monotone_in_k():
    model = disk_model(kind="constant", xm=1.0)
    w = Window("box", 2, 10.0, lengths=(1.0, 1.0))
    rz = simulate_realization(model, w, np.random.default_rng(1))
    vals = [volume_fraction(rz, k, 4000, np.random.default_rng(7)).value
            for k in (1, 2, 3)]
    assert 0.0 <= vals[2] <= vals[1] <= vals[0] <= 1.0


def test_volume_fraction_calibration_unit_disks():
    # 500 replications at lam = 20: mean within 4 combined SE of 1 - e^{-pi}
    model = disk_model(kind="constant", xm=1.0)
    w = Window("box", 2, 20.0, lengths=(1.0, 1.0))
    rng = np.random.default_rng(11)
    vals = np.array([
        volume_fraction(simulate_realization(model, w, rng), 1, 2000, rng).value
        for _ in range(500)])
    p = 1 - math.exp(-math.pi)
    se = vals.std(ddof=1) / math.sqrt(len(vals))
    assert abs(vals.mean() - p) <= 4 * se


# --------------------------------------------------------------------------
# weighted functionals
# --------------------------------------------------------------------------

def _box_phi(lo, hi, w):
    return TestFunction(boxes=((tuple(lo), tuple(hi), w),))


def test_weighted_functional_indicator_consistency():
    model = disk_model(kind="constant", xm=1.0)
    w = Window("box", 2, 8.0, lengths=(1.0, 1.0))
    rz = simulate_realization(model, w, np.random.default_rng(2))
    phi = _box_phi((-0.5, -0.5), (0.5, 0.5), 1.0)
    a = weighted_functional(rz, phi, 1, 3000, np.random.default_rng(5))
    b = volume_fraction(rz, 1, 3000, np.random.default_rng(5))
    lamnu = 8.0 ** 2
    assert a.value == pytest.approx(lamnu * 1.0 * b.value, rel=1e-12)


def test_weighted_functional_negation_and_additivity():
    model = disk_model(kind="constant", xm=1.0)
    w = Window("box", 2, 8.0, lengths=(1.0, 1.0))
    rz = simulate_realization(model, w, np.random.default_rng(3))
    b1 = ((-0.5, -0.5), (0.0, 0.5), 1.0)
    b2 = ((0.0, -0.5), (0.5, 0.5), 2.0)
    both = weighted_functional(rz, TestFunction(boxes=(b1, b2)), 1, 4000,
                               np.random.default_rng(9))
    only1 = weighted_functional(rz, TestFunction(boxes=(b1,)), 1, 4000,
                                np.random.default_rng(10))
    only2 = weighted_functional(rz, TestFunction(boxes=(b2,)), 1, 4000,
                                np.random.default_rng(11))
    comb_se = math.hypot(only1.se, only2.se) + both.se
    assert abs(both.value - (only1.value + only2.value)) <= 4 * comb_se + 1e-9
    neg = weighted_functional(rz, _box_phi((-0.5, -0.5), (0.5, 0.5), -1.0), 1,
                              3000, np.random.default_rng(12))
    pos = weighted_functional(rz, _box_phi((-0.5, -0.5), (0.5, 0.5), 1.0), 1,
                              3000, np.random.default_rng(12))
    assert neg.value == pytest.approx(-pos.value, rel=1e-12)


def test_test_function_validation():
    with pytest.raises(GrainConfigError):
        TestFunction(boxes=(((0, 0), (1, 1), 1.0), ((0.5, 0.5), (1.5, 1.5), 1.0)))
    phi = TestFunction(boxes=(((0, 0), (2, 1), 1.5), ((3, 0), (4, 1), -0.5)))
    assert phi.norm1 == pytest.approx(1.5 * 2 + 0.5)
    assert phi.norm_inf == 1.5


def test_empty_support():
    model = disk_model()
    w = Window("box", 2, 4.0, lengths=(1.0, 1.0))
    rz = simulate_realization(model, w, np.random.default_rng(0))
    e = weighted_functional(rz, TestFunction(boxes=()), 1, 100, np.random.default_rng(0))
    assert e.value == 0.0 and e.se == 0.0


# --------------------------------------------------------------------------
# hyperplane estimator
# --------------------------------------------------------------------------

def test_hyperplane_zero_field():
    model = disk_model()
    w = Window("box", 2, 4.0, lengths=(1.0, 1.0))
    from boolgrain.field import Realization
    rz = Realization(model, w, np.zeros((0, 2)), np.zeros(0), np.zeros(0),
                     {"scale": np.zeros(0), "volume": np.zeros(0)})
    H = HyperplaneSpec(nu0=1, lengths=(1.0,))
    assert hyperplane_fraction(rz, H, 500, np.random.default_rng(0)).value == 0.0


def test_hyperplane_requires_nu0_below_nu():
    model = disk_model()
    w = Window("box", 2, 4.0, lengths=(1.0, 1.0))
    rz = simulate_realization(model, w, np.random.default_rng(0))
    with pytest.raises(GrainConfigError):
        hyperplane_fraction(rz, HyperplaneSpec(nu0=2, lengths=(1.0, 1.0)), 100,
                            np.random.default_rng(0))


def test_hyperplane_footprint_check():
    model = disk_model()
    w = Window("box", 2, 4.0, lengths=(1.0, 1.0))
    rz = simulate_realization(model, w, np.random.default_rng(0))
    from boolgrain.field import SimulationConfigError
    with pytest.raises(SimulationConfigError):
        hyperplane_fraction(rz, HyperplaneSpec(nu0=1, lengths=(3.0,)), 100,
                            np.random.default_rng(0))


def test_hyperplane_unbiased():
    model = disk_model(kind="pareto", alpha=1.5, xm=0.2)
    w = Window("box", 2, 10.0, lengths=(1.0, 0.2))
    H = HyperplaneSpec(nu0=1, lengths=(1.0,))
    p = model_mu(model).p
    rng = np.random.default_rng(6)
    vals = np.array([
        hyperplane_fraction(simulate_realization(model, w, rng), H, 2000, rng).value
        for _ in range(400)])
    se = vals.std(ddof=1) / math.sqrt(len(vals))
    assert abs(vals.mean() - p) <= 4 * se


# --------------------------------------------------------------------------
# rescaling arithmetic
# --------------------------------------------------------------------------

def test_rescale_examples():
    assert rescale_stat(0.4, 0.4, 123.0, RescaleMode("stable", 2, 1.5)) == 0.0
    z = rescale_stat(0.4 + 1e-3, 0.4, 100.0, RescaleMode("stable", 2, 1.5))
    assert z == pytest.approx(100.0 ** (2.0 / 3.0) * 1e-3)
    assert z == pytest.approx(0.021544346900, abs=1e-9)
    g = rescale_stat(0.5, 0.4, 100.0, RescaleMode("gaussian", 2))
    assert g == pytest.approx(10.0)


def test_hyper_stable_reduces_to_stable_at_nu0_eq_nu():
    a = 1.5
    assert alpha0_of(a, 2, 2) == pytest.approx(a)
    m_full = RescaleMode("stable", 2, a)
    m_hyp = RescaleMode("hyper-stable", 2, alpha0_of(a, 2, 2))
    assert m_full.exponent == pytest.approx(m_hyp.exponent)


# --------------------------------------------------------------------------
# covariance of the linear field
# --------------------------------------------------------------------------

def test_covariance_at_zero_is_mu():
    model = disk_model(kind="pareto", alpha=1.5, xm=0.2)
    mu = model_mu(model).mu
    assert covariance_rX(model, (0.0, 0.0)).value == pytest.approx(mu, rel=1e-6)


def test_covariance_unit_disk_lens_value():
    model = disk_model(kind="constant", xm=1.0)
    want = 2 * math.pi / 3 - math.sqrt(3) / 2
    got = covariance_rX(model, (1.0, 0.0))
    assert got.value == pytest.approx(want, abs=1e-10)
    assert got.value == pytest.approx(1.22837, abs=1e-5)
    # symmetry and vanishing beyond the diameter
    assert covariance_rX(model, (-1.0, 0.0)).value == pytest.approx(got.value)
    assert covariance_rX(model, (2.5, 0.0)).value == 0.0


def test_covariance_mc_matches_exact():
    model = disk_model(kind="constant", xm=1.0)
    rng = np.random.default_rng(3)
    mc = covariance_rX(model, (1.0, 0.0), n_mc=50_000, rng=rng, method="mc")
    want = 2 * math.pi / 3 - math.sqrt(3) / 2
    assert mc.value == pytest.approx(want, abs=1e-9)  # constant law: no MC noise


def test_covariance_decay_slopes():
    for nu, want in ((1, -0.5), (2, -1.0)):
        model = disk_model(kind="pareto", alpha=1.5, xm=0.2, nu=nu)
        grid = [4.0, 6.0, 9.0, 13.5, 20.0]
        dirs = [np.eye(nu)[0]]
        fit = covariance_decay_check(model, dirs, grid)
        assert abs(fit.slope - want) <= 0.15


def test_covariance_bounded_grains_vanish():
    model = disk_model(kind="bounded-uniform", xm=1.0)
    # diameter never exceeds 2 xm^(1/2) = 2
    assert covariance_rX(model, (2.5, 0.0)).value == 0.0


# --------------------------------------------------------------------------
# directional intensity ell(z)
# --------------------------------------------------------------------------

def test_ell_isotropy_unit_disk():
    model = disk_model(kind="pareto", alpha=1.5, xm=1.0)
    vals = [ell_direction(model, z) for z in
            (np.array([1.0, 0.0]), np.array([0.0, 1.0]),
             np.array([1.0, 1.0]) / math.sqrt(2))]
    assert all(v >= 0 for v in vals)
    assert max(vals) - min(vals) <= 0.01 * max(vals)


def test_ell_nu1_against_riemann_sum():
    model = disk_model(kind="pareto", alpha=1.5, xm=1.0, nu=1)
    got = ell_direction(model, np.array([1.0]))
    # dense-Riemann-sum oracle over r on a log grid
    a = model.law.alpha
    c_f = a * model.law.c_R
    r = np.exp(np.linspace(math.log(0.5), math.log(4000.0), 400_001))
    overlap = np.maximum(2.0 - 1.0 / r, 0.0)
    integrand = overlap * r ** (-a)
    riemann = c_f * np.trapezoid(integrand, r)
    # tail beyond the grid: overlap ~ 2, integral 2 r^(1-a)/(a-1)
    riemann += c_f * 2.0 * 4000.0 ** (1 - a) / (a - 1)
    assert got == pytest.approx(riemann, rel=0.005)


# --------------------------------------------------------------------------
# sigma^2 and the indicator covariance
# --------------------------------------------------------------------------

def test_indicator_cov_zero_overlap():
    assert indicator_cov_from_rx(0.0, 1.0, 1) == 0.0
    assert indicator_cov_from_rx(0.0, 1.0, 3) == 0.0


def test_indicator_cov_series_matches_closed_form_k1():
    for mu in (0.5, 1.0, 2.5):
        for a in (0.05, 0.3, 0.9 * mu):
            closed = math.exp(-2 * mu) * math.expm1(a)
            # evaluate through the bivariate series (k=2 path with k=1)
            from boolgrain.estimators import indicator_cov_from_rx as f
            # force the series by calling with k=1 via its own identity check:
            from scipy.stats import poisson
            jmax = int(poisson.isf(1e-12, a)) + 1
            js = np.arange(jmax + 1)
            series = float(np.sum(poisson.pmf(js, a) * poisson.sf(-js, mu - a) ** 2))
            series -= float(poisson.sf(0, mu)) ** 2
            assert series == pytest.approx(closed, abs=1e-6)
            assert f(a, mu, 1) == pytest.approx(closed, rel=1e-12)


def test_sigma2_interval_closed_form():
    got = sigma2(interval_model())
    assert got == pytest.approx(SIGMA2_INTERVAL, rel=1e-6)
    assert SIGMA2_INTERVAL == pytest.approx(0.194418, abs=1e-6)


def test_sigma2_k2_positive_and_smaller():
    s1 = sigma2(interval_model(), k=1)
    s2 = sigma2(interval_model(), k=2)
    assert 0 < s2 < s1


def test_sigma2_refuses_lrd():
    model = disk_model(kind="pareto", alpha=1.5, xm=0.2)
    with pytest.raises(EstimatorError):
        sigma2(model)  # full-dimension integral diverges


def test_sigma2_hyperplane_dimension_converges():
    # nu=2, alpha=1.8: covariance tail 1/|t|^1.6 integrates over dim 1
    model = disk_model(kind="pareto", alpha=1.8, xm=0.2)
    val = sigma2(model, nu0=1)
    assert val > 0


# --------------------------------------------------------------------------
# c_Xi, h_inf, slice moment
# --------------------------------------------------------------------------

def test_cxi_closed_forms():
    assert cXi(disk_model(kind="pareto", alpha=1.5, xm=1.0)) == pytest.approx(
        math.pi ** 1.5)
    assert cXi(disk_model(kind="pareto", alpha=1.5, xm=1.0)) == pytest.approx(
        5.5683, abs=1e-4)
    m1 = disk_model(kind="pareto", alpha=1.5, xm=1.0, nu=1)
    assert cXi(m1) == pytest.approx(2.0 ** 1.5)
    # doubling c_R doubles c_Xi: c_R = xm^alpha
    m2 = disk_model(kind="pareto", alpha=1.5, xm=2.0 ** (1 / 1.5), nu=1)
    assert cXi(m2) == pytest.approx(2.0 * cXi(m1), rel=1e-9)


def test_h_infinity_example():
    model = disk_model(kind="pareto", alpha=1.3, xm=1.0)
    assert h_infinity(model, 1) == pytest.approx(1.3 * 2 / (1.6 * 1))
    assert h_infinity(model, 1) == pytest.approx(1.625)


def test_slice_moment_ball_base():
    model = disk_model(kind="pareto", alpha=1.3, xm=1.0)
    a0 = alpha0_of(1.3, 2, 1)
    want, _ = integrate.quad(lambda s: (2.0 * math.sqrt(max(1 - s * s, 0.0))) ** a0,
                             -1.0, 1.0)
    assert slice_moment(model, 1) == pytest.approx(want, rel=1e-6)


def test_slice_moment_degenerate_nu0_eq_nu():
    model = disk_model(kind="pareto", alpha=1.5, xm=1.0)
    assert slice_moment(model, 2) == pytest.approx(math.pi ** 1.5, rel=1e-9)


def test_model_mu_rejects_degenerate_base():
    class _EmptyBase:
        deterministic = True
        volume = 0.0
        bound = 1.0
        kind = "unit-ball"
    model = disk_model()
    object.__setattr__(model, "base", _EmptyBase())
    with pytest.raises(GrainConfigError):
        model_mu(model)


def test_volume_fraction_se_scales_with_budget():
    model = disk_model(kind="constant", xm=1.0)
    w = Window("box", 2, 10.0, lengths=(1.0, 1.0))
    rz = simulate_realization(model, w, np.random.default_rng(5))
    e1 = volume_fraction(rz, 1, 2000, np.random.default_rng(6))
    e2 = volume_fraction(rz, 1, 32000, np.random.default_rng(7))
    assert e1.se > 0 and e2.se > 0
    assert e2.se == pytest.approx(e1.se / 4.0, rel=0.25)  # budget x16 -> SE / 4
