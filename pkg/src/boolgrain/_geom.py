"""Exact low-dimensional geometry used by grain measurements.

Closed forms are kept in one place so that the grain and estimator modules
share a single implementation (balls, ball-ball overlaps, corner-anchored
rectangles against centered disks, interval unions).
"""
from __future__ import annotations

import math

import numpy as np


def unit_ball_volume(nu: int) -> float:
    """Lebesgue measure of the unit ball in R^nu."""
    return math.pi ** (nu / 2) / math.gamma(nu / 2 + 1)


def ball_overlap(nu: int, radius: float, dist):
    """Volume of the intersection of two nu-balls of equal ``radius`` whose
    centers are ``dist`` apart.  Vectorized in ``dist``; exact for nu <= 3.
    """
    a = float(radius)
    d = np.abs(np.asarray(dist, dtype=float))
    if a <= 0:
        return np.zeros_like(d) if d.ndim else 0.0
    if nu == 1:
        out = np.maximum(2 * a - d, 0.0)
    elif nu == 2:
        x = np.clip(d / (2 * a), 0.0, 1.0)
        out = np.where(
            d < 2 * a,
            2 * a * a * np.arccos(x) - (d / 2) * np.sqrt(np.maximum(4 * a * a - d * d, 0.0)),
            0.0,
        )
    elif nu == 3:
        out = np.where(d < 2 * a, (math.pi / 12.0) * (4 * a + d) * (2 * a - d) ** 2, 0.0)
    else:
        raise NotImplementedError(f"ball_overlap not implemented for nu={nu}")
    return out if np.ndim(dist) else float(out)


def _sqrt_int(x, r):
    """Antiderivative of sqrt(r^2 - t^2) evaluated at t = x (0 <= x <= r)."""
    x = np.clip(x, 0.0, r)
    return 0.5 * (x * np.sqrt(np.maximum(r * r - x * x, 0.0)) + r * r * np.arcsin(np.clip(x / r, -1.0, 1.0)))


def rect_in_disk_area(w, h, r: float):
    """Area of the rectangle [0, w] x [0, h] lying inside the disk of radius
    ``r`` centered at the rectangle corner (the origin).  Vectorized in w, h.
    """
    w = np.asarray(w, dtype=float)
    h = np.asarray(h, dtype=float)
    if r <= 0:
        out = np.zeros(np.broadcast(w, h).shape)
        return out if out.ndim else float(out)
    wc = np.minimum(w, r)
    # below x* = sqrt(r^2 - h^2) the disk boundary is above height h
    xs = np.sqrt(np.maximum(r * r - h * h, 0.0))
    x1 = np.minimum(wc, xs)
    out = h * x1 + _sqrt_int(wc, r) - _sqrt_int(x1, r)
    return out if out.ndim else float(out)


def rect_tail_volume(w, h, lam: float):
    """Area of [0, w] x [0, h] outside the centered disk of radius lam."""
    return w * h - rect_in_disk_area(w, h, lam)


def centered_cube_tail_volume(side: float, lam: float, nu: int) -> float:
    """Volume of the centered cube of given side outside the ball of radius
    lam.  Exact for nu <= 2 (spec'd closed forms); caller uses MC otherwise.
    """
    half = side / 2.0
    if nu == 1:
        return float(2.0 * max(half - lam, 0.0))
    if nu == 2:
        # quadrant symmetry: 4 corner rectangles [0, half]^2
        return float(4.0 * rect_tail_volume(half, half, lam))
    raise NotImplementedError(f"no closed form for nu={nu}")


def interval_union_length(lo: np.ndarray, hi: np.ndarray) -> float:
    """Total length of the union of intervals [lo_i, hi_i]."""
    if len(lo) == 0:
        return 0.0
    order = np.argsort(lo)
    lo = lo[order]
    hi = hi[order]
    total = 0.0
    cur_lo, cur_hi = lo[0], hi[0]
    for a, b in zip(lo[1:], hi[1:]):
        if a > cur_hi:
            total += cur_hi - cur_lo
            cur_lo, cur_hi = a, b
        elif b > cur_hi:
            cur_hi = b
    return float(total + (cur_hi - cur_lo))


def uniform_in_ball(rng, n: int, nu: int, radius=1.0) -> np.ndarray:
    """n points uniform in the nu-ball.  ``radius`` may be scalar or (n,)."""
    x = rng.standard_normal((n, nu))
    norms = np.linalg.norm(x, axis=1)
    norms[norms == 0] = 1.0
    r = np.asarray(radius, dtype=float) * rng.random(n) ** (1.0 / nu)
    return x * (r / norms)[:, None]
