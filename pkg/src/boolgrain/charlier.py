"""Charlier polynomials of the Poisson law and level-indicator coefficients.

The polynomials are defined through the generating function

    sum_k u^k / k! * P_k(x; mu) = (1 + u)^x exp(-u mu),

which fixes the normalization unambiguously: P_0 = 1, P_1(x; mu) = x - mu,
and E[P_j(N; mu) P_k(N; mu)] = delta_jk * k! * mu^k for N ~ Poisson(mu).
Coefficients are expanded in exact rational arithmetic (the float inputs are
dyadic rationals, so Fraction evaluation is exact up to the final rounding).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

MAX_DEGREE = 20


class CharlierError(ValueError):
    pass


def _poly_coeffs(j: int, mu: float) -> list:
    """Coefficients (Fraction) of P_j(x; mu) in the falling-factorial basis:
    P_j(x; mu) = sum_i C(j, i) (x)_i (-mu)^(j-i)."""
    m = Fraction(mu)
    return [Fraction(math.comb(j, i)) * (-m) ** (j - i) for i in range(j + 1)]


def charlier_poly(j: int, x: int, mu: float, max_degree: int = MAX_DEGREE) -> float:
    """P_j(x; mu) for integer x >= 0, exact rational evaluation."""
    if j < 0 or j > max_degree:
        raise CharlierError(f"degree {j} outside [0, {max_degree}]")
    if x < 0 or x != int(x):
        raise CharlierError("x must be a nonnegative integer")
    coeffs = _poly_coeffs(j, mu)
    total = Fraction(0)
    ff = Fraction(1)  # falling factorial (x)_i
    for i, c in enumerate(coeffs):
        total += c * ff
        ff *= x - i
    return float(total)


@dataclass
class CharlierBasis:
    """Value table P_j(x; mu) for j <= max_degree and x <= x_max."""

    mu: float
    max_degree: int = MAX_DEGREE
    x_max: int = 60

    def __post_init__(self):
        if self.mu <= 0:
            raise CharlierError("mu must be positive")
        if self.max_degree > MAX_DEGREE:
            raise CharlierError(f"degree cap is {MAX_DEGREE}")
        self.table = np.array([
            [charlier_poly(j, x, self.mu, self.max_degree) for x in range(self.x_max + 1)]
            for j in range(self.max_degree + 1)
        ])

    def value(self, j: int, x: int) -> float:
        if j > self.max_degree:
            raise CharlierError(f"degree {j} exceeds table degree {self.max_degree}")
        if x <= self.x_max:
            return float(self.table[j, x])
        return charlier_poly(j, x, self.mu, self.max_degree)

    def generating_function_gap(self, u: float, x: int) -> float:
        """|sum_k u^k/k! P_k(x) - (1+u)^x e^(-u mu)|, truncation ignored when
        the series terminates (x and the exponential tail both small)."""
        s = sum(u ** k / math.factorial(k) * self.value(k, x)
                for k in range(self.max_degree + 1))
        target = (1.0 + u) ** x * math.exp(-u * self.mu)
        return abs(s - target)


def _poisson_pmf_upto(mu: float, n_max: int) -> np.ndarray:
    pmf = np.empty(n_max + 1)
    pmf[0] = math.exp(-mu)
    for n in range(1, n_max + 1):
        pmf[n] = pmf[n - 1] * mu / n
    return pmf


def _truncation_point(mu: float, tail_tol: float, degree: int = 0) -> int:
    """Smallest n with the Poisson tail mass below tail_tol, weighted by the
    polynomial growth (n + mu)^degree of the summand being truncated."""
    n = max(int(mu + 10 * math.sqrt(mu) + 20), 40)
    while True:
        pmf = _poisson_pmf_upto(mu, n)
        # superexponential decay past the weighted mode: the final term bounds
        # the remainder up to a small geometric factor.  The tolerance is
        # absolute because these sums cancel down to order-one targets.
        tail = pmf[-1] * ((n + mu) ** degree if degree else 1.0)
        if 3.0 * tail <= tail_tol:
            weight = (np.arange(n + 1) + mu) ** degree if degree else np.ones(n + 1)
            wt = pmf * weight
            keep = len(wt) - np.searchsorted(np.cumsum(wt[::-1]), tail_tol / 3.0)
            return max(int(keep) + 1, int(mu) + degree + 5)
        if n > 100_000:
            raise CharlierError("Poisson truncation failed to converge")
        n *= 2


def _frac_table(max_degree: int, mu: float, n_max: int) -> list:
    """Exact P_j(n; mu) values as Fractions, j <= max_degree, n <= n_max."""
    out = []
    for j in range(max_degree + 1):
        coeffs = _poly_coeffs(j, mu)
        row = []
        for n in range(n_max + 1):
            total = Fraction(0)
            ff = Fraction(1)
            for i, c in enumerate(coeffs):
                total += c * ff
                ff *= n - i
            row.append(total)
        out.append(row)
    return out


def charlier_coeff(k: int, mu: float, j: int, tail_tol: float = 1e-12,
                   method: str = "auto") -> float:
    """c_{k,mu}(j) = mu^(-j) E[I(N >= k) P_j(N; mu)], N ~ Poisson(mu).

    method "sum" forces the truncated Poisson sum (computed in exact rational
    arithmetic to dodge the cancellation in high-degree terms); "auto"
    shortcuts j = 1 through the closed form e^(-mu) mu^(k-1) / (k-1)!.
    """
    if k < 1 or mu <= 0:
        raise CharlierError("need k >= 1 and mu > 0")
    if method not in ("auto", "sum", "closed"):
        raise CharlierError(f"unknown method {method!r}")
    if j == 1 and method in ("auto", "closed"):
        return math.exp(-mu) * mu ** (k - 1) / math.factorial(k - 1)
    if method == "closed":
        raise CharlierError("closed form is only available for j = 1")
    n_max = _truncation_point(mu, tail_tol, degree=j)
    m = Fraction(mu)
    table = _frac_table(j, mu, n_max)[j]
    total = Fraction(0)
    weight = m ** k / math.factorial(k)  # mu^n / n! at n = k
    for n in range(k, n_max + 1):
        total += weight * table[n]
        weight = weight * m / (n + 1)
    return float(total / m ** j) * math.exp(-mu)


def orthogonality_check(max_degree: int, mu: float, tail_tol: float = 1e-12) -> float:
    """max_{j,k <= J} of the relative gap |E[P_j(N) P_k(N)] - delta_jk j! mu^j|
    by truncated sums in exact rational arithmetic (only the Poisson tail and
    the final e^(-mu) rounding remain)."""
    if max_degree > MAX_DEGREE:
        raise CharlierError(f"degree cap is {MAX_DEGREE}")
    n_max = _truncation_point(mu, tail_tol, degree=2 * max_degree)
    m = Fraction(mu)
    table = _frac_table(max_degree, mu, n_max)
    weights = []
    weight = Fraction(1)
    for n in range(n_max + 1):
        weights.append(weight)
        weight = weight * m / (n + 1)
    emu = math.exp(-mu)
    worst = 0.0
    for j in range(max_degree + 1):
        for k in range(j, max_degree + 1):
            total = Fraction(0)
            for n in range(n_max + 1):
                total += weights[n] * table[j][n] * table[k][n]
            inner = float(total) * emu
            target = math.factorial(j) * float(m ** j) if j == k else 0.0
            worst = max(worst, abs(inner - target) / max(1.0, abs(target)))
    return worst


def expansion_l2_residual(k: int, mu: float, max_degree: int,
                          tail_tol: float = 1e-12) -> float:
    """L2(Poisson) norm of I(x >= k) - P(N >= k) minus its Charlier partial
    sum of degree max_degree (decreases monotonically in the degree)."""
    n_max = _truncation_point(mu, tail_tol, degree=2 * max_degree)
    pmf = _poisson_pmf_upto(mu, n_max)
    pk = math.fsum(pmf[k:])
    f = (np.arange(n_max + 1) >= k).astype(float) - pk
    approx = np.zeros(n_max + 1)
    for j in range(1, max_degree + 1):
        c = charlier_coeff(k, mu, j, tail_tol, method="sum")
        approx += c / math.factorial(j) * np.array(
            [charlier_poly(j, n, mu) for n in range(n_max + 1)])
    return math.sqrt(math.fsum(pmf * (f - approx) ** 2))
