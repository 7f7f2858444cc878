import math

import pytest

from boolgrain.charlier import (
    CharlierBasis,
    CharlierError,
    charlier_coeff,
    charlier_poly,
    expansion_l2_residual,
    orthogonality_check,
)


def test_degree_zero_is_one():
    for x in (0, 1, 7, 30):
        assert charlier_poly(0, x, 2.7) == 1.0


def test_degree_one_is_x_minus_mu():
    assert charlier_poly(1, 5, 2.0) == 3.0
    assert charlier_poly(1, 0, 0.5) == -0.5


def test_degree_two_expansion():
    # x^2 - x(2 mu + 1) + mu^2, spot check at (3, 1): 9 - 9 + 1
    assert charlier_poly(2, 3, 1.0) == 1.0
    for x in range(6):
        mu = 1.75
        want = x * x - x * (2 * mu + 1) + mu * mu
        assert charlier_poly(2, x, mu) == pytest.approx(want, abs=1e-12)


def test_degree_cap():
    with pytest.raises(CharlierError):
        charlier_poly(25, 1, 1.0)


def test_generating_function_identity():
    basis = CharlierBasis(mu=1.5, max_degree=20, x_max=12)
    for u in (0.03, -0.05, 0.08):
        for x in (0, 2, 5, 9):
            assert basis.generating_function_gap(u, x) < 1e-10


def test_coefficient_closed_forms():
    # c_{1,mu}(1) = e^{-mu}
    assert charlier_coeff(1, math.pi, 1) == pytest.approx(math.exp(-math.pi), abs=1e-15)
    assert charlier_coeff(1, math.pi, 1) == pytest.approx(0.04322, abs=1e-5)
    # c_{2,1}(1) = e^{-1}
    assert charlier_coeff(2, 1.0, 1) == pytest.approx(math.exp(-1.0), abs=1e-15)
    # c_{k,mu}(0) = P(N >= k)
    assert charlier_coeff(1, 1.0, 0, method="sum") == pytest.approx(
        1 - math.exp(-1.0), abs=1e-12)


def test_closed_form_matches_truncated_sum():
    for mu in (0.5, 1.0, math.pi):
        for k in range(1, 6):
            closed = charlier_coeff(k, mu, 1, method="closed")
            summed = charlier_coeff(k, mu, 1, method="sum")
            assert abs(closed - summed) < 1e-12


def test_orthogonality():
    # E[(N - 2)^2] = 2 = 1! * 2^1; the 1e-12 Poisson tail truncation leaves
    # a residue around 1e-11
    assert orthogonality_check(1, 2.0) < 1e-10
    assert orthogonality_check(10, 3.0) < 1e-9


def test_expansion_residual_monotone_in_degree():
    for mu in (0.8, 2.0):
        res = [expansion_l2_residual(2, mu, J) for J in (1, 2, 4, 8, 12)]
        assert all(a >= b - 1e-12 for a, b in zip(res, res[1:]))
        assert res[-1] < res[0]


def test_expansion_reproduces_indicator():
    # partial sums converge to I(x >= k) - P(N >= k) in L2(Poisson)
    for k in (1, 3, 5):
        for mu in (0.5, 5.0):
            assert expansion_l2_residual(k, mu, 20) < 0.05


def test_coeff_validation():
    with pytest.raises(CharlierError):
        charlier_coeff(0, 1.0, 1)
    with pytest.raises(CharlierError):
        charlier_coeff(1, -1.0, 1)
    with pytest.raises(CharlierError):
        charlier_coeff(1, 1.0, 2, method="closed")
