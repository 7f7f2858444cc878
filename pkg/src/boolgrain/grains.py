"""Grain laws and per-grain geometric measurements.

A grain model describes the distribution of the generic random set used by
the coverage field: either a randomly homothetic grain (a base set inside
the unit ball, dilated by R^(1/nu) with R heavy-tailed) or one of the two
rectangular network-traffic families in the plane.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._geom import (
    centered_cube_tail_volume,
    interval_union_length,
    rect_tail_volume,
    unit_ball_volume,
    uniform_in_ball,
)

DEFAULT_MC_POINTS = 100_000
_GRAIN_VOLUME_MC = 8_192  # per-sample budget when a grain volume has no closed form


class GrainConfigError(ValueError):
    """Invalid grain model configuration."""


class InternalError(RuntimeError):
    """A guard tripped that indicates a bug, not a user error."""


# ---------------------------------------------------------------------------
# heavy-tailed scale laws
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HeavyTailLaw:
    """Law of the scale variable R.

    kind in {"pareto", "constant", "bounded-uniform"}.  Pareto has survival
    P(R > x) = (x / xm)^(-alpha) for x >= xm, with tail constant
    c_R = xm^alpha and tail index restricted to (1, 2).  The constant and
    bounded-uniform kinds have finite second moment and serve the Gaussian
    workloads; bounded-uniform is Uniform(0, xm].
    """

    kind: str
    alpha: Optional[float] = None
    xm: float = 1.0

    def __post_init__(self):
        if self.kind not in ("pareto", "constant", "bounded-uniform"):
            raise GrainConfigError(f"unknown R law kind: {self.kind!r}")
        if self.xm <= 0:
            raise GrainConfigError("xm must be positive")
        if self.kind == "pareto":
            if self.alpha is None or not (1.0 < self.alpha < 2.0):
                raise GrainConfigError("pareto tail index must lie strictly in (1, 2)")

    @property
    def c_R(self) -> Optional[float]:
        """Tail constant of P(R > x) ~ c_R x^(-alpha); None for bounded laws."""
        if self.kind == "pareto":
            return self.xm ** self.alpha
        return None

    @property
    def has_finite_square(self) -> bool:
        return self.kind != "pareto"

    def moment(self, q: float) -> float:
        """E R^q in closed form (requires q < alpha for pareto)."""
        if q == 0:
            return 1.0
        if self.kind == "pareto":
            if q >= self.alpha:
                raise GrainConfigError(f"E R^{q} diverges for alpha={self.alpha}")
            return self.alpha * self.xm ** q / (self.alpha - q)
        if self.kind == "constant":
            return self.xm ** q
        return self.xm ** q / (q + 1.0)  # Uniform(0, xm]

    @property
    def mean(self) -> float:
        return self.moment(1.0)

    def sample(self, rng, n: Optional[int] = None):
        """Inverse-CDF draws; scalar when n is None."""
        m = 1 if n is None else n
        if self.kind == "pareto":
            out = self.xm * rng.random(m) ** (-1.0 / self.alpha)
        elif self.kind == "constant":
            out = np.full(m, self.xm)
        else:
            out = self.xm * (1.0 - rng.random(m))  # uniform on (0, xm]
        return float(out[0]) if n is None else out

    def tilted_sample(self, rng, q: float, n: int) -> np.ndarray:
        """Draws from the R^q-size-biased law, density r^q f(r) / E R^q.

        For pareto this is pareto with index alpha - q; for the bounded
        kinds the closed-form inverse CDF is used.  Needs q < alpha.
        """
        if q == 0:
            return self.sample(rng, n)
        if self.kind == "pareto":
            if q >= self.alpha:
                raise GrainConfigError("size-bias exponent too large for tail index")
            return self.xm * rng.random(n) ** (-1.0 / (self.alpha - q))
        if self.kind == "constant":
            return np.full(n, self.xm)
        return self.xm * rng.random(n) ** (1.0 / (q + 1.0))


def sample_R(law: HeavyTailLaw, rng) -> float:
    """One draw of the scale variable R."""
    return law.sample(rng)


# ---------------------------------------------------------------------------
# base shapes (subsets of the open unit ball)
# ---------------------------------------------------------------------------

class UnitBall:
    """Deterministic base grain: the unit ball of R^nu."""

    kind = "unit-ball"
    deterministic = True

    def __init__(self, nu: int):
        self.nu = nu
        self.volume = unit_ball_volume(nu)
        self.bound = 1.0

    def sample(self, rng):
        return None

    def contains(self, pts: np.ndarray, smp) -> np.ndarray:
        return np.einsum("ij,ij->i", pts, pts) < 1.0

    def bounding_radius(self, smp) -> float:
        return 1.0

    def volume_of(self, smp) -> float:
        return self.volume

    def slice_measure(self, smp, s_perp: np.ndarray, nu0: int, rng=None,
                      n_mc: int = DEFAULT_MC_POINTS) -> float:
        # slice of a nu-ball is a nu0-ball of radius sqrt(1 - |s''|^2)
        r2 = 1.0 - float(np.dot(s_perp, s_perp))
        if r2 <= 0:
            return 0.0
        return unit_ball_volume(nu0) * r2 ** (nu0 / 2.0)

    def tail_volume(self, smp, lam: float, rng=None, n_mc: int = DEFAULT_MC_POINTS) -> float:
        if lam >= 1.0:
            return 0.0
        return self.volume - unit_ball_volume(self.nu) * lam ** self.nu


class ScaledCube:
    """Deterministic base grain: centered cube inscribed in the unit ball."""

    kind = "unit-cube-scaled"
    deterministic = True

    def __init__(self, nu: int):
        self.nu = nu
        self.side = 2.0 / math.sqrt(nu)
        self.volume = self.side ** nu
        self.bound = 1.0

    def sample(self, rng):
        return None

    def contains(self, pts: np.ndarray, smp) -> np.ndarray:
        return np.all(np.abs(pts) < self.side / 2.0, axis=1)

    def bounding_radius(self, smp) -> float:
        return 1.0

    def volume_of(self, smp) -> float:
        return self.volume

    def slice_measure(self, smp, s_perp, nu0, rng=None, n_mc=DEFAULT_MC_POINTS) -> float:
        if np.all(np.abs(s_perp) < self.side / 2.0):
            return self.side ** nu0
        return 0.0

    def tail_volume(self, smp, lam, rng=None, n_mc=DEFAULT_MC_POINTS) -> float:
        if self.nu <= 2:
            return centered_cube_tail_volume(self.side, lam, self.nu)
        return _mc_tail_volume(self, smp, lam, 1.0, self.nu, rng, n_mc)


@dataclass
class BallUnionSample:
    """Realized union of balls: centers (n, nu), radii (n,)."""
    centers: np.ndarray
    radii: np.ndarray
    rho: float
    volume: float
    disjoint: bool


class Lilypond:
    """Hard-ball base grain: simultaneous unit-rate growth inside the unit
    ball, each ball frozen on first contact with a neighbor or the boundary.
    Produces disjoint balls, so the sample volume is a plain sum.
    """

    kind = "lilypond"
    deterministic = False

    def __init__(self, nu: int, intensity: float = 4.0):
        if intensity <= 0:
            raise GrainConfigError("lilypond intensity must be positive")
        self.nu = nu
        self.intensity = intensity
        self.bound = 1.0

    def sample(self, rng) -> BallUnionSample:
        vball = unit_ball_volume(self.nu)
        # zero-truncated Poisson count keeps Leb(base) > 0 a.s.
        while True:
            n = rng.poisson(self.intensity * vball)
            if n >= 1:
                break
        centers = uniform_in_ball(rng, n, self.nu)
        radii = lilypond_grow(centers)
        vol = float(np.sum(vball * radii ** self.nu))
        rho = float(np.max(np.linalg.norm(centers, axis=1) + radii))
        return BallUnionSample(centers, radii, rho, vol, disjoint=True)

    def contains(self, pts: np.ndarray, smp: BallUnionSample) -> np.ndarray:
        d2 = np.sum((pts[:, None, :] - smp.centers[None, :, :]) ** 2, axis=2)
        return np.any(d2 < smp.radii[None, :] ** 2, axis=1)

    def bounding_radius(self, smp: BallUnionSample) -> float:
        return smp.rho

    def volume_of(self, smp: BallUnionSample) -> float:
        return smp.volume

    def slice_measure(self, smp, s_perp, nu0, rng=None, n_mc=DEFAULT_MC_POINTS) -> float:
        # disjoint balls slice to disjoint nu0-balls: exact sum
        c_perp = smp.centers[:, nu0:]
        gap2 = smp.radii ** 2 - np.sum((c_perp - np.asarray(s_perp)[None, :]) ** 2, axis=1)
        gap2 = np.maximum(gap2, 0.0)
        return float(np.sum(unit_ball_volume(nu0) * gap2 ** (nu0 / 2.0)))

    def tail_volume(self, smp, lam, rng=None, n_mc=DEFAULT_MC_POINTS) -> float:
        return _mc_tail_volume(self, smp, lam, smp.rho, self.nu, rng, n_mc)


class ClusterBoolean:
    """Cluster base grain: a finite Poisson union of balls with marks on
    (0, 1], rescaled by 1/2 so the union sits inside the unit ball.

    The construction in the source model lives in the ball of radius 2 and
    allows infinitely many components; here the component count is Poisson
    with a configurable mean (zero-truncated) and everything is halved.
    """

    kind = "cluster-boolean"
    deterministic = False

    def __init__(self, nu: int, mean_components: float = 5.0,
                 mark: str = "uniform", mark_exponent: float = 1.0):
        if mean_components <= 0:
            raise GrainConfigError("cluster mean_components must be positive")
        if mark not in ("uniform", "power"):
            raise GrainConfigError(f"unknown mark law {mark!r}")
        if mark == "power" and mark_exponent <= 0:
            raise GrainConfigError("power mark exponent must be positive")
        self.nu = nu
        self.mean_components = mean_components
        self.mark = mark
        self.mark_exponent = mark_exponent
        self.bound = 1.0

    def _sample_marks(self, rng, n: int) -> np.ndarray:
        u = 1.0 - rng.random(n)  # in (0, 1]
        if self.mark == "uniform":
            return u
        return u ** (1.0 / self.mark_exponent)  # density prop. to y^(c-1)

    def sample(self, rng) -> BallUnionSample:
        while True:
            n = rng.poisson(self.mean_components)
            if n >= 1:
                break
        centers = uniform_in_ball(rng, n, self.nu) / 2.0
        radii = self._sample_marks(rng, n) ** (1.0 / self.nu) / 2.0
        rho = float(np.max(np.linalg.norm(centers, axis=1) + radii))
        smp = BallUnionSample(centers, radii, rho, np.nan, disjoint=False)
        smp.volume = self._mc_volume(smp, rng)
        return smp

    def _mc_volume(self, smp: BallUnionSample, rng, n_mc: int = _GRAIN_VOLUME_MC) -> float:
        pts = uniform_in_ball(rng, n_mc, self.nu, smp.rho)
        frac = float(np.mean(self.contains(pts, smp)))
        return frac * unit_ball_volume(self.nu) * smp.rho ** self.nu

    def contains(self, pts: np.ndarray, smp: BallUnionSample) -> np.ndarray:
        d2 = np.sum((pts[:, None, :] - smp.centers[None, :, :]) ** 2, axis=2)
        return np.any(d2 < smp.radii[None, :] ** 2, axis=1)

    def bounding_radius(self, smp: BallUnionSample) -> float:
        return smp.rho

    def volume_of(self, smp: BallUnionSample) -> float:
        return smp.volume

    def slice_measure(self, smp, s_perp, nu0, rng=None, n_mc=DEFAULT_MC_POINTS) -> float:
        s_perp = np.asarray(s_perp, dtype=float)
        c_perp = smp.centers[:, nu0:]
        gap2 = smp.radii ** 2 - np.sum((c_perp - s_perp[None, :]) ** 2, axis=1)
        hit = gap2 > 0
        if not np.any(hit):
            return 0.0
        chord = np.sqrt(gap2[hit])
        c_par = smp.centers[hit, :nu0]
        if nu0 == 1:
            lo = c_par[:, 0] - chord
            hi = c_par[:, 0] + chord
            return interval_union_length(lo, hi)
        # overlapping nu0-balls: MC in the slice's bounding ball
        if rng is None:
            rng = np.random.default_rng(0)
        r0 = float(np.max(np.linalg.norm(c_par, axis=1) + chord))
        pts = uniform_in_ball(rng, n_mc, nu0, r0)
        d2 = np.sum((pts[:, None, :] - c_par[None, :, :]) ** 2, axis=2)
        frac = float(np.mean(np.any(d2 < chord[None, :] ** 2, axis=1)))
        return frac * unit_ball_volume(nu0) * r0 ** nu0

    def tail_volume(self, smp, lam, rng=None, n_mc=DEFAULT_MC_POINTS) -> float:
        return _mc_tail_volume(self, smp, lam, smp.rho, self.nu, rng, n_mc)


def _mc_tail_volume(shape, smp, lam: float, rho: float, nu: int, rng, n_mc: int) -> float:
    """MC estimate of Leb(base ∩ {|t| > lam}) restricted to the bounding
    annulus lam < |t| < rho (uniform there, which is all that can contribute).
    """
    if lam >= rho:
        return 0.0
    if rng is None:
        rng = np.random.default_rng(0)
    x = rng.standard_normal((n_mc, nu))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    rad = (lam ** nu + rng.random(n_mc) * (rho ** nu - lam ** nu)) ** (1.0 / nu)
    pts = x * rad[:, None]
    frac = float(np.mean(shape.contains(pts, smp)))
    return frac * unit_ball_volume(nu) * (rho ** nu - lam ** nu)


def lilypond_grow(germs) -> np.ndarray:
    """Radii of the simultaneous unit-rate growth model inside the unit ball.

    All balls grow together; the earliest event freezes its participant(s):
    two growing balls meet at half their separation, a growing ball reaches
    a frozen one at (distance - frozen radius), or a ball reaches the
    boundary at 1 - |center|.
    """
    germs = np.atleast_2d(np.asarray(germs, dtype=float))
    n = germs.shape[0]
    if n == 0:
        return np.zeros(0)
    dist = np.linalg.norm(germs[:, None, :] - germs[None, :, :], axis=2)
    t_boundary = 1.0 - np.linalg.norm(germs, axis=1)
    radii = np.zeros(n)
    active = np.ones(n, dtype=bool)
    for _ in range(n + 1):
        if not np.any(active):
            return radii
        idx = np.flatnonzero(active)
        best_t = np.inf
        best_event = None  # (kind, i) or (kind, i, j)
        for i in idx:
            t = t_boundary[i]
            ev = ("boundary", i)
            for j in idx:
                if j <= i:
                    continue
                tp = dist[i, j] / 2.0
                if tp < t:
                    t, ev = tp, ("pair", i, j)
            stopped = np.flatnonzero(~active)
            if stopped.size:
                ts = dist[i, stopped] - radii[stopped]
                jm = int(np.argmin(ts))
                if ts[jm] < t:
                    t, ev = ts[jm], ("frozen", i)
            if t < best_t:
                best_t, best_event = t, ev
        if best_event[0] == "pair":
            _, i, j = best_event
            radii[i] = radii[j] = best_t
            active[i] = active[j] = False
        else:
            i = best_event[1]
            radii[i] = best_t
            active[i] = False
    raise InternalError("lilypond growth failed to terminate")


_BASE_KINDS = {
    "unit-ball": UnitBall,
    "unit-cube-scaled": ScaledCube,
    "lilypond": Lilypond,
    "cluster-boolean": ClusterBoolean,
}


# ---------------------------------------------------------------------------
# grain model and samples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrainModel:
    """Distribution of the generic grain.

    family "homothetic" dilates ``base`` by R^(1/nu).  The rectangular
    families (nu = 2 only) are the corner-anchored sets (0,1] x (0,R] and
    (0,R^(1-p)] x (0,R^p].
    """

    nu: int
    family: str
    law: HeavyTailLaw
    base: object = None
    p: Optional[float] = None

    def __post_init__(self):
        if self.nu < 1:
            raise GrainConfigError("dimension nu must be >= 1")
        if self.family == "homothetic":
            if self.base is None:
                raise GrainConfigError("homothetic model needs a base shape")
        elif self.family in ("rect-xiex1", "rect-xiex2"):
            if self.nu != 2:
                raise GrainConfigError("rectangular families require nu = 2")
            if self.family == "rect-xiex2" and not (self.p and 0.0 < self.p < 1.0):
                raise GrainConfigError("rect-xiex2 needs shape parameter p in (0, 1)")
        else:
            raise GrainConfigError(f"unknown grain family {self.family!r}")

    @property
    def is_homothetic(self) -> bool:
        return self.family == "homothetic"

    def rect_exponents(self):
        """(q_w, q_h) with side lengths (R^q_w, R^q_h) for rect families."""
        if self.family == "rect-xiex1":
            return 0.0, 1.0
        return 1.0 - self.p, self.p

    @classmethod
    def from_json(cls, obj: dict) -> "GrainModel":
        try:
            nu = int(obj["nu"])
            family = obj["family"]
            rj = obj["R"]
            law = HeavyTailLaw(kind=rj["kind"], alpha=rj.get("alpha"), xm=float(rj.get("xm", 1.0)))
            if family == "homothetic":
                bkind = obj["base"]
                if isinstance(bkind, dict):
                    kw = {k: v for k, v in bkind.items() if k != "kind"}
                    base = _BASE_KINDS[bkind["kind"]](nu, **kw)
                else:
                    base = _BASE_KINDS[bkind](nu)
                return cls(nu=nu, family=family, law=law, base=base)
            return cls(nu=nu, family=family, law=law, p=obj.get("p"))
        except (KeyError, TypeError) as exc:
            raise GrainConfigError(f"bad grain model JSON: {exc}") from exc

    def to_json(self) -> dict:
        rj = {"kind": self.law.kind, "xm": self.law.xm}
        if self.law.alpha is not None:
            rj["alpha"] = self.law.alpha
        out = {"family": self.family, "R": rj, "nu": self.nu}
        if self.is_homothetic:
            b = {"kind": self.base.kind}
            if isinstance(self.base, Lilypond):
                b["intensity"] = self.base.intensity
            elif isinstance(self.base, ClusterBoolean):
                b["mean_components"] = self.base.mean_components
                b["mark"] = self.base.mark
                if self.base.mark == "power":
                    b["mark_exponent"] = self.base.mark_exponent
            out["base"] = b if len(b) > 1 else self.base.kind
        if self.family == "rect-xiex2":
            out["p"] = self.p
        return out


@dataclass
class GrainSample:
    """One realized grain with cached geometry.

    For homothetic grains ``scale`` is R^(1/nu), the cached volume is
    R * Leb(base) and rho <= scale.  Rectangular grains carry their side
    lengths (w, h) and are anchored at the origin corner.
    """

    model: GrainModel
    R: float
    scale: float
    base_sample: object = None
    volume: float = 0.0
    rho: float = 0.0
    w: float = 0.0
    h: float = 0.0


def sample_grain(model: GrainModel, rng) -> GrainSample:
    """Draw R and the base randomness independently; cache volume and rho."""
    R = model.law.sample(rng)
    if model.is_homothetic:
        scale = R ** (1.0 / model.nu)
        smp = model.base.sample(rng)
        vol = R * model.base.volume_of(smp)
        rho = scale * model.base.bounding_radius(smp)
        return GrainSample(model, R, scale, smp, vol, rho)
    qw, qh = model.rect_exponents()
    w, h = R ** qw, R ** qh
    return GrainSample(model, R, 1.0, None, w * h, math.hypot(w, h), w, h)


def grain_contains(g: GrainSample, t) -> bool:
    """Exact membership of a point (vector in R^nu) in the grain."""
    pts = np.atleast_2d(np.asarray(t, dtype=float))
    return bool(grain_contains_points(g, pts)[0])


def grain_contains_points(g: GrainSample, pts: np.ndarray) -> np.ndarray:
    """Vectorized membership; pts has shape (n, nu)."""
    if g.model.is_homothetic:
        far = np.einsum("ij,ij->i", pts, pts) > g.rho * g.rho
        inside = g.model.base.contains(pts / g.scale, g.base_sample)
        return inside & ~far
    return (pts[:, 0] > 0) & (pts[:, 0] <= g.w) & (pts[:, 1] > 0) & (pts[:, 1] <= g.h)


def grain_tail_volume(g: GrainSample, lam: float, n_mc: int = DEFAULT_MC_POINTS,
                      rng=None) -> float:
    """Leb(grain ∩ {|t| > lam}); exact for balls, cubes (nu <= 2) and
    rectangles, MC on the bounding annulus otherwise.  Zero once lam >= rho.
    """
    if lam <= 0:
        return g.volume
    if lam >= g.rho:
        return 0.0
    if g.model.is_homothetic:
        base = g.model.base
        if isinstance(base, UnitBall):
            return unit_ball_volume(g.model.nu) * (g.R - lam ** g.model.nu)
        if isinstance(base, ScaledCube) and g.model.nu <= 2:
            return centered_cube_tail_volume(base.side * g.scale, lam, g.model.nu)
        # composite shape: scale the query into base coordinates
        return g.R * base.tail_volume(g.base_sample, lam / g.scale, rng=rng, n_mc=n_mc)
    return float(rect_tail_volume(g.w, g.h, lam))


def grain_slice_measure(g: GrainSample, s_perp, nu0: int,
                        n_mc: int = DEFAULT_MC_POINTS, rng=None) -> float:
    """nu0-dimensional measure of {t' : (t', s_perp) in grain}."""
    nu = g.model.nu
    if not (1 <= nu0 <= nu - 1):
        raise GrainConfigError("need 1 <= nu0 <= nu - 1")
    s_perp = np.atleast_1d(np.asarray(s_perp, dtype=float))
    if g.model.is_homothetic:
        base = g.model.base
        g0 = base.slice_measure(g.base_sample, s_perp / g.scale, nu0, rng=rng, n_mc=n_mc)
        return g.scale ** nu0 * g0
    # rectangle, nu = 2, nu0 = 1: chord of length w at heights (0, h]
    s = float(s_perp[0])
    return g.w if 0.0 < s <= g.h else 0.0
