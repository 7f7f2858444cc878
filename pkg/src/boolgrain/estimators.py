"""Volume-fraction estimators, covariance functionals and model constants.

Everything here is either an unbiased point-sampling estimator on a
simulated realization or a deterministic functional of the grain model
(mu, p, c_Xi, r_X, sigma^2, the directional covariance intensity and the
hyperplane slice moment).  Closed forms are used whenever the grain family
admits one; otherwise Monte Carlo with a reported standard error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy import integrate
from scipy.stats import poisson

from ._geom import ball_overlap, unit_ball_volume, uniform_in_ball
from .field import Realization, SimulationConfigError
from .grains import GrainConfigError, GrainModel, ScaledCube, UnitBall


class EstimatorError(RuntimeError):
    """Numerical failure inside an estimator (quadrature breakdown etc.)."""


@dataclass(frozen=True)
class EstimateWithError:
    """A value with its Monte Carlo / quadrature standard error."""
    value: float
    se: float
    n_used: int

    def __float__(self):
        return self.value


# ---------------------------------------------------------------------------
# test functions and hyperplane specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TestFunction:
    """Piecewise-constant member of L^1 ∩ L^inf: disjoint boxes with weights.

    Boxes are (lo, hi, weight) triples in the unscaled coordinates of the
    test function; the weighted functional evaluates the function at t/lam.
    """

    __test__ = False  # despite the name, not a pytest class

    boxes: tuple

    def __post_init__(self):
        for lo, hi, w in self.boxes:
            if len(lo) != len(hi):
                raise GrainConfigError("box corner dimensions differ")
            if any(b <= a for a, b in zip(lo, hi)):
                raise GrainConfigError("box must have positive extent")
            if not math.isfinite(w):
                raise GrainConfigError("box weight must be finite")
        for i in range(len(self.boxes)):
            for j in range(i + 1, len(self.boxes)):
                if self._overlaps(self.boxes[i], self.boxes[j]):
                    raise GrainConfigError("test function boxes must be disjoint")

    @staticmethod
    def _overlaps(b1, b2) -> bool:
        return all(a1 < b2_ and a2 < b1_ for (a1, b1_), (a2, b2_)
                   in zip(zip(b1[0], b1[1]), zip(b2[0], b2[1])))

    @staticmethod
    def box_volume(lo, hi) -> float:
        return float(np.prod(np.asarray(hi) - np.asarray(lo)))

    @property
    def norm1(self) -> float:
        return sum(abs(w) * self.box_volume(lo, hi) for lo, hi, w in self.boxes)

    @property
    def norm_inf(self) -> float:
        return max((abs(w) for *_, w in self.boxes), default=0.0)


@dataclass(frozen=True)
class HyperplaneSpec:
    """Coordinate hyperplane {t : t_i = 0 for nu0 < i <= nu} together with a
    centered sub-window A in the first nu0 coordinates."""

    nu0: int
    shape: str = "box"
    lengths: tuple = ()
    radius: float = 0.0

    def __post_init__(self):
        if self.nu0 < 1:
            raise GrainConfigError("hyperplane dimension nu0 must be >= 1")
        if self.shape == "box":
            if len(self.lengths) != self.nu0 or any(l <= 0 for l in self.lengths):
                raise GrainConfigError("hyperplane box needs nu0 positive lengths")
        elif self.shape == "ball":
            if self.radius <= 0:
                raise GrainConfigError("hyperplane ball needs positive radius")
        else:
            raise GrainConfigError(f"unknown hyperplane window shape {self.shape!r}")

    @property
    def measure_A(self) -> float:
        if self.shape == "box":
            return float(np.prod(self.lengths))
        return unit_ball_volume(self.nu0) * self.radius ** self.nu0

    def halfwidths(self) -> np.ndarray:
        if self.shape == "box":
            return np.asarray(self.lengths) / 2.0
        return np.full(self.nu0, self.radius)

    def sample_points(self, rng, n: int, lam: float) -> np.ndarray:
        if self.shape == "box":
            hw = lam * self.halfwidths()
            return (rng.random((n, self.nu0)) * 2.0 - 1.0) * hw[None, :]
        return uniform_in_ball(rng, n, self.nu0, lam * self.radius)


# ---------------------------------------------------------------------------
# mu, p and the sampled-coverage estimators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MuResult:
    """Grain mean volume mu with the derived vacancy-complement fraction
    p = 1 - exp(-mu)."""
    mu: float
    se: float
    n_used: int
    p: float


def model_mu(model: GrainModel, n_mc: int = 10_000, rng=None) -> MuResult:
    """mu = E Leb(grain).  Closed form whenever available, else MC over
    sampled base grains (homothetic randomness factors out of R)."""
    if model.is_homothetic:
        er = model.law.mean
        base = model.base
        if base.deterministic:
            if base.volume <= 0:
                raise GrainConfigError("base grain volume must be positive")
            mu = er * base.volume
            return MuResult(mu, 0.0, 0, 1.0 - math.exp(-mu))
        if rng is None:
            rng = np.random.default_rng(0)
        vols = np.array([base.volume_of(base.sample(rng)) for _ in range(n_mc)])
        mu = er * float(vols.mean())
        se = er * float(vols.std(ddof=1)) / math.sqrt(n_mc)
        return MuResult(mu, se, n_mc, 1.0 - math.exp(-mu))
    # rectangular families both have Leb = R
    mu = model.law.mean
    return MuResult(mu, 0.0, 0, 1.0 - math.exp(-mu))


def coverage_sample(rz: Realization, n_pts: int, rng) -> np.ndarray:
    """Coverage counts at n_pts i.i.d. uniform points of the window."""
    pts = rz.window.sample_points(rng, n_pts)
    return rz.coverage_counts(pts)


def volume_fraction(rz: Realization, k: int, n_pts: int, rng) -> EstimateWithError:
    """Sample volume fraction of the level-k excursion set on the window,
    by uniform point sampling (unbiased; binomial standard error)."""
    if k < 1 or n_pts < 1:
        raise GrainConfigError("need k >= 1 and n_pts >= 1")
    counts = coverage_sample(rz, n_pts, rng)
    return fraction_from_counts(counts, k)


def fraction_from_counts(counts: np.ndarray, k: int) -> EstimateWithError:
    n = len(counts)
    phat = float(np.mean(counts >= k))
    se = math.sqrt(phat * (1.0 - phat) / n)
    return EstimateWithError(phat, se, n)


def weighted_functional(rz: Realization, phi: TestFunction, k: int,
                        n_pts: int, rng) -> EstimateWithError:
    """Importance-sampled estimate of the phi-weighted excursion volume
    integral(phi(t/lam) * I(X(t) >= k) dt), box by box."""
    lam = rz.window.lam
    nu = rz.model.nu
    boxes = phi.boxes
    if not boxes:
        return EstimateWithError(0.0, 0.0, 0)
    masses = np.array([abs(w) * phi.box_volume(lo, hi) for lo, hi, w in boxes])
    if masses.sum() == 0:
        return EstimateWithError(0.0, 0.0, 0)
    alloc = np.maximum((n_pts * masses / masses.sum()).astype(int), 1)
    total = 0.0
    var = 0.0
    for (lo, hi, w), n_b in zip(boxes, alloc):
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        pts = lam * (lo[None, :] + rng.random((int(n_b), nu)) * (hi - lo)[None, :])
        counts = rz.coverage_counts(pts)
        frac = float(np.mean(counts >= k))
        coef = w * phi.box_volume(lo, hi) * lam ** nu
        total += coef * frac
        var += coef * coef * frac * (1.0 - frac) / n_b
    return EstimateWithError(total, math.sqrt(var), int(alloc.sum()))


def hyperplane_fraction(rz: Realization, H: HyperplaneSpec, n_pts: int,
                        rng) -> EstimateWithError:
    """Covered fraction of the hyperplane sub-window lam * H.A x {0}."""
    nu = rz.model.nu
    if not (1 <= H.nu0 <= nu - 1):
        raise GrainConfigError("need 1 <= nu0 <= nu - 1")
    if not rz.window.contains_segment(H.halfwidths(), H.nu0):
        raise SimulationConfigError("window footprint does not contain the hyperplane sub-window")
    tprime = H.sample_points(rng, n_pts, rz.window.lam)
    pts = np.zeros((n_pts, nu))
    pts[:, :H.nu0] = tprime
    counts = rz.coverage_counts(pts)
    return fraction_from_counts(counts, 1)


# ---------------------------------------------------------------------------
# rescaling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RescaleMode:
    """Normalization mode of the centered volume-fraction statistic.

    kind in {"stable", "gaussian", "hyper-stable", "hyper-gaussian"}; dim is
    nu for the full-window modes and nu0 for the hyperplane ones; alpha is
    the stable index of the matching limit (alpha0 for hyper-stable).
    """

    kind: str
    dim: int
    alpha: Optional[float] = None

    @property
    def exponent(self) -> float:
        if self.kind in ("stable", "hyper-stable"):
            if self.alpha is None or not (1.0 < self.alpha < 2.0):
                raise GrainConfigError("stable rescaling needs alpha in (1, 2)")
            return self.dim - self.dim / self.alpha
        if self.kind in ("gaussian", "hyper-gaussian"):
            return self.dim / 2.0
        raise GrainConfigError(f"unknown rescale mode {self.kind!r}")


def alpha0_of(alpha: float, nu: int, nu0: int) -> float:
    """Hyperplane stable index: 1 + (nu/nu0)(alpha - 1)."""
    return 1.0 + (nu / nu0) * (alpha - 1.0)


def rescale_stat(phat: float, p: float, lam: float, mode: RescaleMode) -> float:
    """lam^e (phat - p) with the mode's exponent table."""
    if lam <= 0:
        raise GrainConfigError("lam must be positive")
    return lam ** mode.exponent * (phat - p)


# ---------------------------------------------------------------------------
# covariance of the linear field
# ---------------------------------------------------------------------------

def _overlap_given_R(model: GrainModel, R: np.ndarray, t: np.ndarray,
                     base_samples=None, rng=None, n_mc_pts: int = 2048) -> np.ndarray:
    """Leb(grain ∩ (grain - t)) for each scale draw (vectorized where exact)."""
    nu = model.nu
    d = float(np.linalg.norm(t))
    if model.is_homothetic:
        scale = R ** (1.0 / nu)
        base = model.base
        if isinstance(base, UnitBall):
            return ball_overlap(nu, 1.0, d / scale) * R
        if isinstance(base, ScaledCube):
            off = np.abs(np.asarray(t, dtype=float))
            gaps = np.maximum(base.side * scale[:, None] - off[None, :], 0.0)
            return np.prod(gaps, axis=1)
        # composite: MC points inside the bounding ball of each sampled grain
        out = np.empty(len(R))
        for i, (r, smp) in enumerate(zip(R, base_samples)):
            s = r ** (1.0 / nu)
            pts = uniform_in_ball(rng, n_mc_pts, nu, smp.rho)
            in1 = base.contains(pts, smp)
            in2 = base.contains(pts + np.asarray(t) / s, smp)
            out[i] = float(np.mean(in1 & in2)) * unit_ball_volume(nu) * smp.rho ** nu * r
        return out
    qw, qh = model.rect_exponents()
    w, h = R ** qw, R ** qh
    return np.maximum(w - abs(t[0]), 0.0) * np.maximum(h - abs(t[1]), 0.0)


def _rx_exact(model: GrainModel, d: float) -> Optional[float]:
    """Deterministic radial r_X for analytic base shapes, via quadrature over
    the scale law (None when no deterministic radial path exists).  Covers
    ball bases in any dimension and the interval base at nu = 1."""
    if not model.is_homothetic or not model.base.deterministic:
        return None
    nu = model.nu
    if not (isinstance(model.base, UnitBall) or
            (isinstance(model.base, ScaledCube) and nu == 1)):
        return None
    law = model.law

    def f(r):
        return ball_overlap(nu, 1.0, d / r ** (1.0 / nu)) * r

    if law.kind == "constant":
        return float(f(law.xm))
    if law.kind == "bounded-uniform":
        val, _ = integrate.quad(f, 0.0, law.xm, limit=200)
        return val / law.xm
    # pareto: density alpha xm^alpha r^(-1-alpha); the overlap vanishes
    # until the dilated diameter 2 r^(1/nu) reaches d.  The full-volume part
    # v_nu E[R; R > r_min] integrates in closed form; only the overlap
    # deficit (which decays a factor r^(-1/nu) faster) needs quadrature.
    a, xm = law.alpha, law.xm
    vb = unit_ball_volume(nu)
    r_min = max(xm, (d / 2.0) ** nu)
    full = vb * a * xm ** a * r_min ** (1.0 - a) / (a - 1.0)
    # substitute r = r_min / t^2 to compactify the slowly-decaying tail
    def deficit_t(t):
        r = r_min / (t * t)
        return ((f(r) - vb * r) * a * xm ** a * r ** (-1 - a)
                * 2.0 * r_min / t ** 3)

    deficit, err = integrate.quad(deficit_t, 0.0, 1.0, limit=400)
    if not math.isfinite(deficit):
        raise EstimatorError(f"covariance quadrature failed at |t|={d}")
    return float(full + deficit)


def covariance_rX(model: GrainModel, t, n_mc: int = 100_000, rng=None,
                  method: str = "auto") -> EstimateWithError:
    """r_X(t) = E Leb(grain ∩ (grain - t)).

    "auto" uses the deterministic quadrature path for analytic bases and
    falls back to Monte Carlo over sampled grains (per-grain overlap exact
    for balls, cubes and rectangles)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if len(t) != model.nu:
        raise GrainConfigError("probe point dimension mismatch")
    d = float(np.linalg.norm(t))
    if method in ("auto", "exact"):
        val = _rx_exact(model, d)
        if val is not None:
            return EstimateWithError(val, 0.0, 0)
        if method == "exact":
            raise EstimatorError("no deterministic covariance path for this model")
    if rng is None:
        rng = np.random.default_rng(0)
    base_samples = None
    if model.is_homothetic and not model.base.deterministic:
        n_mc = min(n_mc, 2000)  # composite grains cost MC points apiece
        base_samples = [model.base.sample(rng) for _ in range(n_mc)]
    R = model.law.sample(rng, n_mc)
    ov = _overlap_given_R(model, R, t, base_samples=base_samples, rng=rng)
    return EstimateWithError(float(ov.mean()), float(ov.std(ddof=1)) / math.sqrt(n_mc), n_mc)


@dataclass(frozen=True)
class DecayFit:
    slope: float
    intercept: float
    distances: tuple
    values: tuple


def covariance_decay_check(model: GrainModel, directions: Sequence,
                           t_grid: Sequence[float], n_mc: int = 100_000,
                           rng=None) -> DecayFit:
    """Log-log regression of r_X along rays; the power-tail exponent of a
    homothetic pareto model is -nu(alpha - 1)."""
    if not (model.is_homothetic and model.law.kind == "pareto"):
        raise GrainConfigError("covariance decay check expects a homothetic pareto model")
    dirs = [np.asarray(z, dtype=float) / np.linalg.norm(z) for z in directions]
    ds, vals = [], []
    for d in t_grid:
        v = float(np.mean([covariance_rX(model, d * z, n_mc=n_mc, rng=rng).value
                           for z in dirs]))
        if v <= 0:
            raise EstimatorError(f"covariance vanished at |t|={d}; shrink the grid")
        ds.append(d)
        vals.append(v)
    if len(ds) < 2:
        raise EstimatorError("need at least two grid points for a slope")
    slope, intercept = np.polyfit(np.log(ds), np.log(vals), 1)
    return DecayFit(float(slope), float(intercept), tuple(ds), tuple(vals))


def ell_direction(model: GrainModel, z, n_mc: int = 400, rng=None,
                  rel_tol: float = 1e-3) -> float:
    """Directional covariance intensity

        ell(z) = c_f * int_0^inf E Leb(base ∩ (base - r^(-1/nu) z)) r^(-alpha) dr

    with c_f = alpha * c_R the density tail constant of the pareto law."""
    if not (model.is_homothetic and model.law.kind == "pareto"):
        raise GrainConfigError("ell(z) is defined for homothetic pareto models")
    z = np.asarray(z, dtype=float)
    z = z / np.linalg.norm(z)
    a = model.law.alpha
    c_f = a * model.law.c_R
    nu = model.nu
    base = model.base
    if isinstance(base, UnitBall):
        overlap = lambda d: ball_overlap(nu, 1.0, d)
    elif isinstance(base, ScaledCube):
        overlap = lambda d: float(np.prod(np.maximum(base.side - np.abs(d * z), 0.0)))
    else:
        if rng is None:
            rng = np.random.default_rng(0)
        samples = [base.sample(rng) for _ in range(n_mc)]
        pts_all = [uniform_in_ball(rng, 2048, nu, s.rho) for s in samples]

        def overlap(d):
            acc = 0.0
            for s, pts in zip(samples, pts_all):
                in1 = base.contains(pts, s)
                in2 = base.contains(pts + d * z, s)
                acc += float(np.mean(in1 & in2)) * unit_ball_volume(nu) * s.rho ** nu
            return acc / len(samples)

    # the base set has diameter < 2, so the integrand vanishes for r <= 2^-nu
    lo = 2.0 ** (-nu)
    integrand = lambda r: overlap(r ** (-1.0 / nu)) * r ** (-a)
    val, err = integrate.quad(integrand, lo, np.inf, limit=400)
    val2, _ = integrate.quad(integrand, lo, np.inf, limit=800, epsabs=1e-12, epsrel=1e-10)
    if abs(val2 - val) > max(rel_tol * abs(val), 1e-12) + 10 * err:
        raise EstimatorError(
            f"ell(z) quadrature did not stabilize: {val} vs {val2} (err {err})")
    return c_f * float(val)


# ---------------------------------------------------------------------------
# sigma^2 and the k-level indicator covariance
# ---------------------------------------------------------------------------

def indicator_cov_from_rx(a: float, mu: float, k: int = 1,
                          tail_tol: float = 1e-12) -> float:
    """Cov(I(X(0) >= k), I(X(t) >= k)) given a = r_X(t).

    The pair (X(0), X(t)) is (N1 + N12, N2 + N12) with independent Poisson
    parts of means (mu - a, mu - a, a); the covariance follows by summing
    the shared component.  For k = 1 this telescopes to the closed form
    exp(-2 mu)(exp(a) - 1).
    """
    if a <= 0:
        return 0.0
    a = min(a, mu)
    if k == 1:
        return math.exp(-2.0 * mu) * math.expm1(a)
    jmax = int(poisson.isf(tail_tol, a)) + 1
    js = np.arange(jmax + 1)
    pj = poisson.pmf(js, a)
    q = poisson.sf(k - js - 1, mu - a)  # P(N1 >= k - j)
    joint = float(np.sum(pj * q * q))
    pk = float(poisson.sf(k - 1, mu))
    return joint - pk * pk


def _rx_function(model: GrainModel, mu: float, n_mc: int, rng) -> Callable[[float], float]:
    """Radial r_X(d) callable: exact quadrature when available, otherwise an
    MC grid with interpolation (composite base laws are isotropic)."""
    if _rx_exact(model, 0.1) is not None:
        return lambda d: _rx_exact(model, d)
    if rng is None:
        rng = np.random.default_rng(0)
    # bounded laws only here (pareto models go through the exact path);
    # the grain diameter never exceeds 2 xm^(1/nu)
    dmax = 2.0 * model.law.xm ** (1.0 / model.nu)
    grid = np.linspace(0.0, dmax, 41)
    vals = []
    for d in grid:
        probe = np.zeros(model.nu)
        probe[0] = d
        vals.append(covariance_rX(model, probe, n_mc=n_mc, rng=rng).value)
    vals = np.asarray(vals)
    vals[0] = mu

    def rx(d):
        return float(np.interp(d, grid, vals, right=0.0))

    return rx


def sigma2(model: GrainModel, k: int = 1, nu0: Optional[int] = None,
           n_mc: int = 2000, rng=None) -> float:
    """Integrated indicator covariance

        sigma_k^2 = int Cov(I(X(0) >= k), I(X(t) >= k)) dt

    over R^nu0 (nu0 defaults to nu; a smaller nu0 integrates over the
    hyperplane used by the sliced CLT).  Requires a short-range model on the
    integration dimension; long-range inputs are refused.
    """
    nu = model.nu
    dim = nu if nu0 is None else nu0
    law = model.law
    if not model.is_homothetic:
        raise EstimatorError("sigma2 supports homothetic grain models")
    if isinstance(model.base, ScaledCube) and nu > 1:
        raise EstimatorError("sigma2 needs a radially symmetric grain law (cube base only at nu = 1)")
    if law.kind == "pareto" and nu * (law.alpha - 1.0) <= dim:
        raise EstimatorError(
            f"covariance tail |t|^(-{nu * (law.alpha - 1):.3g}) is not integrable over "
            f"dimension {dim}: the model is long-range there (SRD precondition)")
    mu = model_mu(model, rng=rng).mu
    rx = _rx_function(model, mu, n_mc, rng)
    cov = lambda d: indicator_cov_from_rx(rx(d), mu, k)
    if law.kind == "pareto":
        # power tail: integrate far enough that the remainder is negligible
        dmax = 2.0 * (law.xm * 1e8) ** (1.0 / nu)
    else:
        dmax = 2.0 * law.xm ** (1.0 / nu) + 1e-9
    if dim == 1:
        val, _ = integrate.quad(cov, 0.0, dmax, limit=400)
        return 2.0 * val
    surf = dim * unit_ball_volume(dim)
    val, _ = integrate.quad(lambda s: cov(s) * s ** (dim - 1), 0.0, dmax, limit=400)
    return surf * val


def cXi(model: GrainModel, n_mc: int = 10_000, rng=None) -> float:
    """Tail constant of Leb(grain): c_R * E Leb(base)^alpha (homothetic
    pareto models)."""
    if not (model.is_homothetic and model.law.kind == "pareto"):
        raise GrainConfigError("c_Xi is defined for homothetic pareto models")
    a = model.law.alpha
    base = model.base
    if base.deterministic:
        return model.law.c_R * base.volume ** a
    if rng is None:
        rng = np.random.default_rng(0)
    vols = np.array([base.volume_of(base.sample(rng)) for _ in range(n_mc)])
    return model.law.c_R * float(np.mean(vols ** a))


# ---------------------------------------------------------------------------
# hyperplane limit constants
# ---------------------------------------------------------------------------

def h_infinity(model: GrainModel, nu0: int) -> float:
    """Limit of x^alpha0 E[R^(1 - nu0/nu) I(R > x^(nu/nu0))]:
    c_R * alpha * nu / (alpha0 * nu0)."""
    if not (model.is_homothetic and model.law.kind == "pareto"):
        raise GrainConfigError("h_infinity needs a homothetic pareto model")
    a = model.law.alpha
    a0 = alpha0_of(a, model.nu, nu0)
    return model.law.c_R * a * model.nu / (a0 * nu0)


def slice_moment(model: GrainModel, nu0: int, n_mc: int = 400, rng=None) -> float:
    """int E[g0(s'')^alpha0] ds'' over R^(nu - nu0), where g0 is the base
    slice measure.  Degenerates to E Leb(base)^alpha at nu0 = nu."""
    if not (model.is_homothetic and model.law.kind == "pareto"):
        raise GrainConfigError("slice moment needs a homothetic pareto model")
    nu = model.nu
    a0 = alpha0_of(model.law.alpha, nu, nu0)
    base = model.base
    if nu0 == nu:
        return cXi(model, n_mc=max(n_mc, 10_000), rng=rng) / model.law.c_R
    codim = nu - nu0
    if isinstance(base, UnitBall):
        vb = unit_ball_volume(nu0)

        def g_pow(s):  # radial in |s''|
            return (vb * max(1.0 - s * s, 0.0) ** (nu0 / 2.0)) ** a0

        if codim == 1:
            val, _ = integrate.quad(g_pow, -1.0, 1.0, limit=200)
            return float(val)
        surf = codim * unit_ball_volume(codim)
        val, _ = integrate.quad(lambda s: g_pow(s) * s ** (codim - 1), 0.0, 1.0, limit=200)
        return surf * float(val)
    if isinstance(base, ScaledCube):
        return (base.side ** nu0) ** a0 * base.side ** codim
    # random base: MC over grains, radial quadrature over the slice offset
    if rng is None:
        rng = np.random.default_rng(0)
    samples = [base.sample(rng) for _ in range(n_mc)]
    grid = np.linspace(0.0, 1.0, 21)

    def mean_pow(s):
        sv = np.zeros(codim)
        sv[0] = s
        return float(np.mean([base.slice_measure(smp, sv, nu0, rng=rng, n_mc=4096) ** a0
                              for smp in samples]))

    vals = np.array([mean_pow(s) for s in grid])
    if codim == 1:
        return 2.0 * float(np.trapezoid(vals, grid))
    surf = codim * unit_ball_volume(codim)
    return surf * float(np.trapezoid(vals * grid ** (codim - 1), grid))
