"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 13, 2026

@author: specpot team
"""
import math
import pytest
from fractions import Fraction
import numpy as np
from pytest import approx

from specpot.core.api import PoleError, ParameterError
from specpot.core.specfun import (
    SignedLog, log_gamma, pochhammer, poch_over_factorial, hyp_terminating,
    laguerre, laguerre_table, laguerre_deriv
)


def laguerre_series(n, nu, y):
    """ Explicit series sum_k (-1)^k binom(n+nu, n-k) y^k / k! in exact
    rational arithmetic, the float sum cancels badly for large y.

    """
    nu, y = Fraction(nu), Fraction(y)
    total = Fraction(0)
    for k in range(n + 1):
        binom = Fraction(1)
        for j in range(1, n - k + 1):
            binom *= (nu + k + j) / j
        total += (-1) ** k * binom * y ** k / math.factorial(k)
    return float(total)


def test_log_gamma_values():
    g = log_gamma(1)
    assert g.sign == 1 and g.logmag == approx(0, abs=1e-15)
    g = log_gamma(5)
    assert g.sign == 1 and g.logmag == approx(math.log(24), rel=1e-14)


def test_log_gamma_reflection():
    x = -4.5
    expected = math.pi / (math.sin(math.pi * x) * math.gamma(1 - x))
    assert log_gamma(x).value() == approx(expected, rel=1e-12)


@pytest.mark.parametrize('x', [0, -1, -2, -7])
def test_log_gamma_pole(x):
    with pytest.raises(PoleError):
        log_gamma(x)


def test_signed_log_arithmetic():
    a = SignedLog.from_value(-3.0)
    b = SignedLog.from_value(2.5)
    assert (a * b).value() == approx(-7.5, rel=1e-15)
    assert (a / b).value() == approx(-1.2, rel=1e-15)
    assert (a * SignedLog.zero()).sign == 0
    assert SignedLog.from_value(1e-300).value() == approx(1e-300, rel=1e-14)
    with pytest.raises(ParameterError):
        a.sqrt()


def test_pochhammer_values():
    assert pochhammer(3.7, 0).value() == 1.0
    for n in range(8):
        assert pochhammer(1, n).value() == approx(math.factorial(n),
                                                  rel=1e-13)
    expected = (-3.2) * (-2.2) * (-1.2) * (-0.2)
    r = pochhammer(-3.2, 4)
    assert r.sign == 1
    assert r.value() == approx(expected, rel=1e-13)
    assert pochhammer(-3.2, 3).sign == -1


def test_pochhammer_integer_negative():
    #: (-2)_3 contains a zero factor
    assert pochhammer(-2, 3).sign == 0
    assert pochhammer(-3, 2).value() == approx(6.0, rel=1e-14)
    assert pochhammer(-3, 3).value() == approx(-6.0, rel=1e-14)


@pytest.mark.parametrize('a, n, m', [
    (2.5, 3, 4), (-3.2, 2, 5), (0.3, 0, 6), (-7.7, 4, 4),
])
def test_pochhammer_split(a, n, m):
    whole = pochhammer(a, n + m)
    parts = pochhammer(a, n) * pochhammer(a + n, m)
    assert whole.sign == parts.sign
    assert whole.logmag == approx(parts.logmag, abs=1e-12)


def test_poch_over_factorial():
    for n in range(10):
        expected = pochhammer(3.3, n).value() / math.factorial(n)
        assert poch_over_factorial(3.3, n) == approx(expected, rel=1e-13)


def test_hyp_terminating_trivial():
    assert hyp_terminating([0, 2.3], [1.7], 0.4) == 1.0


@pytest.mark.parametrize('n, z', [(3, 0.3), (6, -0.8), (10, 0.5)])
def test_hyp_terminating_binomial(n, z):
    #: 2F1(-n, b; b; z) = (1 - z)^n
    assert hyp_terminating([-n, 2.7], [2.7], z) == approx((1 - z) ** n,
                                                          rel=1e-12)


@pytest.mark.parametrize('n, b, c', [(4, 1.5, 3.2), (7, -2.3, 4.1)])
def test_hyp_terminating_gauss(n, b, c):
    #: 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
    expected = pochhammer(c - b, n).value() / pochhammer(c, n).value()
    assert hyp_terminating([-n, b], [c], 1.0) == approx(expected, rel=1e-12)


def test_hyp_terminating_errors():
    with pytest.raises(ParameterError):
        hyp_terminating([0.5, 1.5], [2.0], 0.3)
    with pytest.raises(PoleError):
        hyp_terminating([-3, 1.0], [-1.0], 0.5)


def test_laguerre_low_degree():
    y = np.linspace(0, 10, 7)
    assert np.all(laguerre(0, 2.5, y) == 1.0)
    assert laguerre(1, 2.5, y) == approx(3.5 - y, rel=1e-15)


@pytest.mark.parametrize('n, nu, y', [
    (5, 2.5, 3.7), (8, 0.0, 1.2), (12, 10.4, 20.0), (3, -0.5, 0.25),
])
def test_laguerre_series(n, nu, y):
    assert laguerre(n, nu, y) == approx(laguerre_series(n, nu, y),
                                        rel=1e-10)


def test_laguerre_reference_value():
    #: High precision reference value
    assert laguerre(12, 10.4, 20.0) == approx(800.1098479156351, rel=1e-12)
    assert laguerre_series(12, 10.4, 20.0) == approx(800.1098479156351,
                                                     rel=1e-14)


def test_laguerre_recursion_identity():
    rng = np.random.default_rng(7)
    nu = 3.2
    y = rng.uniform(0, 50, 20)
    L = laguerre_table(21, nu, y)
    for n in range(1, 21):
        rhs = (-(n + 1) * L[n + 1] + (2 * n + nu + 1) * L[n] -
               (n + nu) * L[n - 1])
        assert y * L[n] == approx(rhs, rel=1e-12, abs=1e-12 * np.max(
            np.abs(L[n + 1])))


@pytest.mark.parametrize('n', range(1, 11))
def test_laguerre_differential_identity(n):
    nu, h = 2.5, 1e-5
    y = np.linspace(0.5, 9.5, 9)
    fd = (laguerre(n, nu, y + h) - laguerre(n, nu, y - h)) / (2 * h)
    rhs = (n * laguerre(n, nu, y) - (n + nu) * laguerre(n - 1, nu, y)) / y
    assert fd == approx(rhs, rel=1e-6, abs=1e-6)
    assert laguerre_deriv(n, nu, y) == approx(rhs, rel=1e-10, abs=1e-10)


@pytest.mark.parametrize('n', range(0, 11))
def test_laguerre_differential_equation(n):
    nu, h = 1.5, 1e-4
    y = np.linspace(0.5, 9.5, 9)
    L = lambda t: laguerre(n, nu, t)
    d1 = (L(y + h) - L(y - h)) / (2 * h)
    d2 = (L(y + h) - 2 * L(y) + L(y - h)) / h ** 2
    residual = y * d2 + (nu + 1 - y) * d1 + n * L(y)
    scale = max(1.0, np.max(np.abs(L(y))))
    assert np.max(np.abs(residual)) / scale <= 1e-4
