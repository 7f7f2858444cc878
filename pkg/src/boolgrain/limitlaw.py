"""Reference limit laws: totally skewed stable laws in Levy form, their
sampler, CDF inversion, and the fit/goodness-of-fit statistics used to test
the distributional limits.

The log-characteristic function produced by the scaling limits is

    j(theta) = i theta c * int_0^inf (e^{i theta x} - 1) x^(-alpha) dx,

with 1 < alpha < 2 and c > 0 a model constant.  In the standard stable
parametrization this is the S(alpha, beta=1, sigma, delta=0) law with

    sigma^alpha = c * Gamma(2 - alpha) * |cos(pi alpha / 2)| / (alpha - 1),

a mapping that the test suite re-derives by quadrature.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from scipy import integrate
from scipy.special import gamma as _gamma, gammaln



class LimitLawError(ValueError):
    pass


# ---------------------------------------------------------------------------
# law containers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StableLaw:
    """S(alpha, beta, sigma, delta) in the standard (S1) parametrization:
    log cf = i delta theta - (sigma |theta|)^alpha (1 - i beta sgn(theta) tan(pi alpha/2)).
    For alpha > 1 the mean is delta."""

    alpha: float
    beta: float = 1.0
    sigma: float = 1.0
    delta: float = 0.0
    provenance: dict = dataclass_field(default_factory=dict)

    def __post_init__(self):
        if not (1.0 < self.alpha < 2.0):
            raise LimitLawError("stable index must lie strictly in (1, 2)")
        if not (-1.0 <= self.beta <= 1.0):
            raise LimitLawError("skew must lie in [-1, 1]")
        if self.sigma <= 0:
            raise LimitLawError("scale must be positive")

    def cf(self, theta):
        theta = np.asarray(theta, dtype=float)
        mod = (self.sigma * np.abs(theta)) ** self.alpha
        phase = self.beta * np.sign(theta) * math.tan(math.pi * self.alpha / 2)
        out = np.exp(1j * self.delta * theta - mod * (1 - 1j * phase))
        return out if out.ndim else complex(out)

    def cdf(self, x):
        return stable_cdf(x, self)

    def sample(self, rng, n: Optional[int] = None):
        return stable_sample(self, rng, n)

    def to_json(self) -> dict:
        return {"kind": "stable", "alpha": self.alpha, "beta": self.beta,
                "sigma": self.sigma, "delta": self.delta,
                "provenance": dict(self.provenance)}


@dataclass(frozen=True)
class GaussianLaw:
    mean: float
    variance: float
    provenance: dict = dataclass_field(default_factory=dict)

    def __post_init__(self):
        if self.variance <= 0:
            raise LimitLawError("variance must be positive")

    def cf(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.exp(1j * self.mean * theta - 0.5 * self.variance * theta ** 2)
        return out if out.ndim else complex(out)

    def cdf(self, x):
        z = (np.asarray(x, dtype=float) - self.mean) / math.sqrt(self.variance)
        out = 0.5 * (1.0 + np.vectorize(math.erf)(z / math.sqrt(2.0)))
        return out if out.ndim else float(out)

    def sample(self, rng, n: Optional[int] = None):
        return self.mean + math.sqrt(self.variance) * rng.standard_normal(n)

    def to_json(self) -> dict:
        return {"kind": "gaussian", "mean": self.mean, "variance": self.variance,
                "provenance": dict(self.provenance)}


# ---------------------------------------------------------------------------
# Levy-form characteristic function (quadrature route)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _levy_inner_unit(alpha: float) -> complex:
    """J(alpha) = int_0^inf (e^{iy} - 1) y^(-alpha) dy.

    Series below y = 1 (uniformly convergent there) plus an oscillatory
    Fourier quadrature on [1, inf) and the exact -1/(alpha-1) from the
    constant part.
    """
    n = np.arange(1, 60)
    series = np.sum(np.exp(1j * math.pi / 2 * n - gammaln(n + 1)) / (n + 1 - alpha))
    tail_cos, _ = integrate.quad(lambda y: y ** (-alpha), 1, np.inf, weight="cos", wvar=1.0)
    tail_sin, _ = integrate.quad(lambda y: y ** (-alpha), 1, np.inf, weight="sin", wvar=1.0)
    return complex(series) + tail_cos + 1j * tail_sin - 1.0 / (alpha - 1.0)


def levy_cf(theta: float, c: float, alpha: float) -> complex:
    """exp(i theta c I(theta)) with I(theta) = int_0^inf (e^{i theta x}-1) x^(-alpha) dx,
    evaluated by quadrature (series near zero, Fourier tail).  |result| <= 1."""
    if not (1.0 < alpha < 2.0):
        raise LimitLawError("alpha must lie strictly in (1, 2)")
    if c <= 0:
        raise LimitLawError("c must be positive")
    if theta == 0:
        return 1.0 + 0.0j
    inner = _levy_inner_unit(alpha) * abs(theta) ** (alpha - 1.0)
    if theta < 0:
        inner = inner.conjugate()
    return cmath.exp(1j * theta * c * inner)


def stable_scale_from_levy(c: float, alpha: float) -> float:
    """Scale of the S1 law matching the Levy form with constant c."""
    num = c * _gamma(2.0 - alpha) * abs(math.cos(math.pi * alpha / 2.0))
    return (num / (alpha - 1.0)) ** (1.0 / alpha)


# ---------------------------------------------------------------------------
# limit specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LimitSpec:
    """Constants feeding the limit law of a rescaled volume-fraction
    statistic.  tag selects the regime; leb_A is the measure of A in the
    estimator's own dimension (nu, or nu0 on a hyperplane)."""

    tag: str                      # T1-stable | T2-gaussian | T3-hyper-stable | T3-hyper-gaussian
    mu: float
    leb_A: float
    nu: int
    k: int = 1
    alpha: Optional[float] = None
    c_xi: Optional[float] = None
    nu0: Optional[int] = None
    h_inf: Optional[float] = None
    slice_moment: Optional[float] = None
    sigma_k2: Optional[float] = None


def t3_branch(alpha: float, nu: int, nu0: int, margin: float = 0.0) -> str:
    """Which side of the hyperplane phase boundary alpha = 1 + nu0/nu we are
    on; the boundary itself (within ``margin``) is refused as uncovered."""
    boundary = 1.0 + nu0 / nu
    if abs(alpha - boundary) <= margin or alpha == boundary:
        raise LimitLawError(
            f"alpha={alpha} sits on the uncovered phase boundary 1 + nu0/nu = {boundary}")
    return "stable" if alpha < boundary else "gaussian"


def limit_law_from_model(spec: LimitSpec):
    """Map a LimitSpec to its reference law.

    T1: prefactor e^(-mu) mu^(k-1)/(k-1)! times the stable integral over A
    with Levy constant c_xi * Leb(A), all divided by Leb(A).
    T3-stable: same shape with index alpha0 and Levy constant
    h_inf * slice-moment * Leb(A); T2 / T3-gaussian: centered normal with
    variance sigma_k^2 / Leb(A).
    """
    if spec.leb_A <= 0:
        raise LimitLawError("Leb(A) must be positive")
    prov = {"tag": spec.tag, "k": spec.k, "mu": spec.mu, "leb_A": spec.leb_A}
    if spec.tag == "T1-stable":
        if spec.alpha is None or spec.c_xi is None:
            raise LimitLawError("T1 law needs alpha and c_xi")
        prefactor = math.exp(-spec.mu) * spec.mu ** (spec.k - 1) / math.factorial(spec.k - 1)
        c = spec.c_xi * spec.leb_A
        sig = prefactor * stable_scale_from_levy(c, spec.alpha) / spec.leb_A
        prov.update(c=c, prefactor=prefactor, c_xi=spec.c_xi)
        return StableLaw(spec.alpha, 1.0, sig, 0.0, prov)
    if spec.tag == "T2-gaussian":
        if spec.sigma_k2 is None:
            raise LimitLawError("T2 law needs sigma_k^2")
        prov.update(sigma_k2=spec.sigma_k2)
        return GaussianLaw(0.0, spec.sigma_k2 / spec.leb_A, prov)
    if spec.tag == "T3-hyper-stable":
        if None in (spec.alpha, spec.nu0, spec.h_inf, spec.slice_moment):
            raise LimitLawError("T3 stable law needs alpha, nu0, h_inf and the slice moment")
        if spec.k != 1:
            raise LimitLawError("the hyperplane limit is stated for the Boolean set (k = 1)")
        if spec.nu0 < spec.nu and t3_branch(spec.alpha, spec.nu, spec.nu0) != "stable":
            raise LimitLawError(
                f"alpha={spec.alpha} exceeds the stable phase boundary 1 + nu0/nu")
        a0 = 1.0 + (spec.nu / spec.nu0) * (spec.alpha - 1.0)
        c = spec.h_inf * spec.slice_moment * spec.leb_A
        sig = math.exp(-spec.mu) * stable_scale_from_levy(c, a0) / spec.leb_A
        prov.update(c=c, alpha0=a0, h_inf=spec.h_inf, slice_moment=spec.slice_moment)
        return StableLaw(a0, 1.0, sig, 0.0, prov)
    if spec.tag == "T3-hyper-gaussian":
        if spec.sigma_k2 is None or spec.nu0 is None or spec.alpha is None:
            raise LimitLawError("T3 gaussian law needs alpha, nu0 and sigma_k^2")
        if t3_branch(spec.alpha, spec.nu, spec.nu0) != "gaussian":
            raise LimitLawError(
                f"alpha={spec.alpha} lies below the Gaussian phase boundary 1 + nu0/nu")
        prov.update(sigma_k2=spec.sigma_k2, nu0=spec.nu0)
        return GaussianLaw(0.0, spec.sigma_k2 / spec.leb_A, prov)
    raise LimitLawError(f"unknown limit tag {spec.tag!r}")


# ---------------------------------------------------------------------------
# sampling and numerical CDF
# ---------------------------------------------------------------------------

def stable_sample(law: StableLaw, rng, n: Optional[int] = None):
    """Exact draw(s) by the trigonometric (CMS) construction for skewed
    stable laws, in the S1 parametrization (delta is the mean)."""
    m = 1 if n is None else int(n)
    a, b = law.alpha, law.beta
    V = rng.uniform(-math.pi / 2, math.pi / 2, m)
    W = rng.exponential(1.0, m)
    tanf = math.tan(math.pi * a / 2)
    B = math.atan(b * tanf) / a
    S = (1.0 + b * b * tanf * tanf) ** (1.0 / (2.0 * a))
    X = (S * np.sin(a * (V + B)) / np.cos(V) ** (1.0 / a)
         * (np.cos(V - a * (V + B)) / W) ** ((1.0 - a) / a))
    out = law.delta + law.sigma * X
    return float(out[0]) if n is None else out


_GAUSS_X, _GAUSS_W = np.polynomial.legendre.leggauss(10)
_TAIL_CUT = 100.0  # standardized |x| beyond which the series tail is sharper


def _tail_constant(alpha: float) -> float:
    """C_alpha with P(X > x) ~ (1+beta) C_alpha x^(-alpha) for sigma = 1."""
    return _gamma(alpha) * math.sin(math.pi * alpha / 2.0) / math.pi


def _stable_cdf_std(u: float, alpha: float, beta: float) -> float:
    """CDF of S(alpha, beta, 1, 0) by Gil-Pelaez inversion with a composite
    Gauss rule; absolute accuracy well under 1e-4."""
    if u > _TAIL_CUT:
        return min(1.0, 1.0 - (1.0 + beta) * _tail_constant(alpha) * u ** (-alpha))
    if u < -_TAIL_CUT:
        return max(0.0, (1.0 - beta) * _tail_constant(alpha) * (-u) ** (-alpha))
    tanf = math.tan(math.pi * alpha / 2.0)
    tmax = 23.0 ** (1.0 / alpha)
    nseg = int(math.ceil(tmax * (abs(u) + 8.0) / (math.pi / 3.0)))
    nseg = min(max(nseg, 40), 60_000)
    edges = np.linspace(0.0, tmax, nseg + 1)
    mid = (edges[1:] + edges[:-1]) / 2.0
    half = (edges[1] - edges[0]) / 2.0
    t = (mid[:, None] + half * _GAUSS_X[None, :]).ravel()
    w = np.broadcast_to(half * _GAUSS_W[None, :], (nseg, 10)).ravel()
    integrand = np.exp(-t ** alpha) * np.sin(beta * tanf * t ** alpha - t * u) / t
    val = 0.5 - float(np.sum(w * integrand)) / math.pi
    return min(max(val, 0.0), 1.0)


def stable_cdf(x, law: StableLaw):
    """CDF by numerical inversion of the characteristic function.  Scalar or
    array input; large arrays are evaluated on a dense grid with monotone
    interpolation.  Output is clipped monotone into [0, 1]."""
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    u = (xs - law.delta) / law.sigma
    if len(u) <= 64:
        out = np.array([_stable_cdf_std(v, law.alpha, law.beta) for v in u])
    else:
        lo = max(float(u.min()), -_TAIL_CUT)
        hi = min(float(u.max()), _TAIL_CUT)
        if lo > hi:
            lo, hi = hi, lo
        grid = np.linspace(lo - 1e-9, hi + 1e-9, 2048)
        vals = np.array([_stable_cdf_std(v, law.alpha, law.beta) for v in grid])
        vals = np.maximum.accumulate(vals)
        from scipy.interpolate import PchipInterpolator
        interp = PchipInterpolator(grid, vals, extrapolate=False)
        out = np.empty(len(u))
        inside = (u >= grid[0]) & (u <= grid[-1])
        out[inside] = interp(u[inside])
        out[~inside] = [_stable_cdf_std(v, law.alpha, law.beta) for v in u[~inside]]
    out = np.clip(out, 0.0, 1.0)
    return out if np.ndim(x) else float(out[0])


def stable_ppf(q: float, law: StableLaw) -> float:
    """Quantile by bisection on the numerical CDF."""
    if not (0.0 < q < 1.0):
        raise LimitLawError("quantile level must be in (0, 1)")
    from scipy.optimize import brentq
    lo, hi = -10.0, 10.0
    while _stable_cdf_std(lo, law.alpha, law.beta) > q:
        lo *= 2.0
        if lo < -1e9:
            raise LimitLawError("quantile bracket failed (low side)")
    while _stable_cdf_std(hi, law.alpha, law.beta) < q:
        hi *= 2.0
        if hi > 1e9:
            raise LimitLawError("quantile bracket failed (high side)")
    root = brentq(lambda v: _stable_cdf_std(v, law.alpha, law.beta) - q, lo, hi, xtol=1e-10)
    return law.delta + law.sigma * float(root)


# ---------------------------------------------------------------------------
# distances and diagnostics
# ---------------------------------------------------------------------------

def ks_distance(sample, law) -> float:
    """Sup distance between the empirical CDF and the reference law
    (law may be a law object with .cdf or a plain callable)."""
    xs = np.sort(np.asarray(sample, dtype=float))
    if len(xs) == 0:
        raise LimitLawError("sample must be nonempty")
    cdf = law.cdf if hasattr(law, "cdf") else law
    F = np.asarray(cdf(xs), dtype=float)
    n = len(xs)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - F), np.max(F - (i - 1) / n)))


def cf_distance(sample, law, theta_grid: Sequence[float]) -> float:
    """max over the grid of |empirical CF - law CF| (theta = 0 excluded)."""
    thetas = np.asarray(theta_grid, dtype=float)
    if len(thetas) == 0 or np.any(thetas == 0.0):
        raise LimitLawError("theta grid must be nonempty with nonzero entries")
    xs = np.asarray(sample, dtype=float)
    worst = 0.0
    block = max(1, int(2e6 / max(len(thetas), 1)))
    emp = np.zeros(len(thetas), dtype=complex)
    for i in range(0, len(xs), block):
        chunk = xs[i:i + block]
        emp += np.exp(1j * np.outer(thetas, chunk)).sum(axis=1)
    emp /= len(xs)
    ref = np.asarray(law.cf(thetas))
    return float(np.max(np.abs(emp - ref)))


def hill_estimator(sample, k_top: int) -> float:
    """Hill tail-index estimate from the top k_top order statistics."""
    xs = np.sort(np.asarray(sample, dtype=float))
    n = len(xs)
    if not (0 < k_top < n):
        raise LimitLawError("need 0 < k_top < sample size")
    tail = xs[n - k_top - 1:]
    if tail[0] <= 0:
        raise LimitLawError("Hill estimator needs positive upper order statistics")
    logs = np.log(tail[1:]) - math.log(tail[0])
    return float(k_top / np.sum(logs))


@dataclass(frozen=True)
class NormalityResult:
    skewness: float
    excess_kurtosis: float
    passed: bool


NORMALITY_SKEW_TOL = 0.2
NORMALITY_KURT_TOL = 0.5


def normality_check(sample) -> NormalityResult:
    """Moment screen: |skew| < 0.2 and |excess kurtosis| < 0.5, thresholds
    calibrated by simulation at n = 2000 (pass prob >= 0.99 for a normal
    sample, decisive rejection of heavy-tailed rescalings)."""
    xs = np.asarray(sample, dtype=float)
    if len(xs) < 500:
        raise LimitLawError("normality screen needs at least 500 observations")
    z = (xs - xs.mean()) / xs.std()
    skew = float(np.mean(z ** 3))
    kurt = float(np.mean(z ** 4) - 3.0)
    return NormalityResult(skew, kurt, abs(skew) < NORMALITY_SKEW_TOL
                           and abs(kurt) < NORMALITY_KURT_TOL)


# ---------------------------------------------------------------------------
# quantile-matching stable fit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StableFit:
    alpha: float
    beta: float
    sigma: float
    delta: float


_FIT_MESH = None


def _fit_mesh():
    """Fine (alpha, beta) mesh of the tabulated quantile summaries."""
    global _FIT_MESH
    if _FIT_MESH is None:
        from scipy.interpolate import RegularGridInterpolator
        from . import _stable_tables as T
        pts = (np.asarray(T.ALPHAS), np.asarray(T.BETAS))
        ia = RegularGridInterpolator(pts, np.asarray(T.NU_ALPHA))
        ib = RegularGridInterpolator(pts, np.asarray(T.NU_BETA))
        iq = RegularGridInterpolator(pts, np.asarray(T.Q_IQR))
        im = RegularGridInterpolator(pts, np.asarray(T.Q_MEDIAN))
        aa = np.linspace(T.ALPHAS[0], T.ALPHAS[-1], 197)
        bb = np.linspace(0.0, 1.0, 51)
        AA, BB = np.meshgrid(aa, bb, indexing="ij")
        mesh = np.stack([AA.ravel(), BB.ravel()], axis=1)
        _FIT_MESH = (mesh, ia(mesh), ib(mesh), iq, im)
    return _FIT_MESH


FIT_QUANTILES = (0.02, 0.25, 0.5, 0.75, 0.98)


def stability_index_fit(sample) -> StableFit:
    """Quantile-matching estimate of (alpha, beta, sigma, delta).

    The spread ratio (q98 - q02)/(q75 - q25) and the skew summary
    (q98 + q02 - 2 q50)/(q98 - q02) are inverted against tables derived
    from the package's own CDF inversion; the index clamps to 2 at the
    Gaussian edge of the table.
    """
    xs = np.asarray(sample, dtype=float)
    if len(xs) < 500:
        raise LimitLawError("stable fit needs at least 500 observations")
    q = np.quantile(xs, FIT_QUANTILES)
    iqr = q[3] - q[1]
    span = q[4] - q[0]
    if iqr <= 0 or span <= 0:
        raise LimitLawError("degenerate sample quantiles")
    va = span / iqr
    vb = (q[4] + q[0] - 2.0 * q[2]) / span
    sgn = 1.0
    if vb < 0:
        sgn, vb = -1.0, -vb
    mesh, ta, tb, iq, im = _fit_mesh()
    d = (ta - va) ** 2 / 10.0 + (tb - vb) ** 2
    ahat, babs = mesh[int(np.argmin(d))]
    if ahat >= mesh[:, 0].max() - 1e-9:
        ahat = 2.0
    bhat = sgn * babs
    node = (min(ahat, float(mesh[:, 0].max())), babs)
    sig = iqr / float(iq(node))
    med = sgn * float(im(node))
    return StableFit(float(ahat), float(bhat), float(sig), float(q[2] - sig * med))
