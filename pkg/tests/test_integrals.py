"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 14, 2026

@author: specpot team
"""
import math
import pytest
import numpy as np
from pytest import approx

from specpot.core.api import ParameterError
from specpot.basis.integrals import (
    IntegralKey, PLUS, MINUS, j_matrix, f_plus, f_plus_matrix, f_minus,
    f_minus_matrix, f_minus_general, quad_oracle
)

NUS = [2.5, 3.2, 10.4]

#: tau = 2 / gamma for gamma = 2 is already in the list
TAUS = [0.0, 0.5, 1.0, 2.0]

SIZE = 9


@pytest.fixture(scope="module")
def oracle_tables():
    """ quad_oracle values for every (nu, k, tau) of the sweep """
    tables = {}
    for nu in NUS:
        for k in range(3):
            for tau in TAUS:
                t = np.zeros((SIZE, SIZE))
                for n in range(SIZE):
                    for m in range(n, SIZE):
                        t[n, m] = t[m, n] = quad_oracle(nu, MINUS, k, tau,
                                                        n, m)
                tables[nu, k, tau] = t
    return tables


def test_j_matrix():
    J = j_matrix(3.0, 5)
    assert J.bandwidth == 1
    assert J.entry(0, 0) == 4.0
    assert J.entry(0, 1) == approx(-2.0)
    assert J.entry(3, 3) == 10.0
    with pytest.raises(ParameterError):
        j_matrix(-1.0, 5)


def test_f_plus_values():
    assert f_plus(3.0, 0, 2, 2, 5) == 1.0
    assert f_plus(3.0, 0, 1, 2, 5) == 0.0
    assert f_plus(3.0, 1, 2, 2, 5) == approx(8.0)
    J = j_matrix(2.5, 6).to_array()
    assert f_plus_matrix(2.5, 1, 6).to_array() == approx(J)


def test_f_plus_margin():
    with pytest.raises(ParameterError):
        f_plus(2.5, 2, 4, 4, 6)


@pytest.mark.parametrize('nu', NUS)
@pytest.mark.parametrize('k', [1, 2])
def test_f_plus_oracle(nu, k):
    for n in range(SIZE - k):
        for m in range(n, SIZE - k):
            ref = quad_oracle(nu, PLUS, k, 0.0, n, m)
            got = f_plus(nu, k, n, m, SIZE)
            assert got == approx(ref, rel=1e-8, abs=1e-10)


def test_f_plus_matrix_band():
    F = f_plus_matrix(3.2, 2, 8)
    assert F.bandwidth == 2
    assert F.entry(0, 0) == approx(quad_oracle(3.2, PLUS, 2, 0.0, 0, 0),
                                   rel=1e-10)


def test_f_minus_trivial():
    assert f_minus(2.5, 0, 0.0, 3, 3) == approx(1.0, rel=1e-13)
    assert f_minus(2.5, 0, 0.0, 1, 3) == approx(0.0, abs=1e-13)
    assert f_minus(2.5, 1, 0.0, 0, 0) == approx(0.4, rel=1e-13)


def test_f_minus_example():
    ref = quad_oracle(3.2, MINUS, 2, 0.5, 1, 2)
    assert f_minus(3.2, 2, 0.5, 1, 2) == approx(ref, rel=1e-8)


@pytest.mark.parametrize('nu', NUS)
@pytest.mark.parametrize('k', [0, 1, 2])
@pytest.mark.parametrize('tau', TAUS)
def test_f_minus_oracle(oracle_tables, nu, k, tau):
    ref = oracle_tables[nu, k, tau]
    got = f_minus_matrix(nu, k, tau, SIZE)
    assert got == approx(ref, rel=1e-8, abs=1e-12)


@pytest.mark.parametrize('nu', NUS)
@pytest.mark.parametrize('k, tau', [(1, 0.0), (2, 0.0), (0, 0.5), (0, 2.0),
                                    (2, 1.0)])
def test_direct_forms(oracle_tables, nu, k, tau):
    """ The closed hypergeometric forms for small indices """
    ref = oracle_tables[nu, k, tau]
    for n in range(5):
        for m in range(5):
            got = f_minus(nu, k, tau, n, m, method='direct')
            assert got == approx(ref[n, m], rel=1e-8, abs=1e-12)


@pytest.mark.parametrize('k, tau', [(2, 0.0), (0, 0.5), (2, 1.0)])
def test_auto_matches_direct(k, tau):
    """ 'auto' is the positive series on every branch 'direct' dispatches """
    F = f_minus_matrix(3.2, k, tau, 6)
    for n in range(6):
        for m in range(6):
            direct = f_minus(3.2, k, tau, n, m, method='direct')
            assert f_minus(3.2, k, tau, n, m) == approx(F[n, m], rel=1e-12)
            assert F[n, m] == approx(direct, rel=1e-10, abs=1e-13)
    with pytest.raises(ParameterError):
        f_minus(3.2, k, tau, 0, 0, method='series')


@pytest.mark.parametrize('nu', NUS)
def test_general_form_reduces(nu):
    for n in range(5):
        for m in range(5):
            #: tau = 0 matches the Gauss summed form
            assert f_minus_general(nu, 2, 0.0, n, m) == approx(
                f_minus(nu, 2, 0.0, n, m, method='direct'), rel=1e-12,
                abs=1e-14)
            #: k = 0 matches the k = 0 form
            assert f_minus_general(nu, 0, 0.5, n, m) == approx(
                f_minus(nu, 0, 0.5, n, m, method='direct'), rel=1e-12,
                abs=1e-14)


def test_f_minus_symmetric():
    F = f_minus_matrix(3.2, 2, 1.0, 12)
    assert np.array_equal(F, F.T)
    for n, m in [(1, 4), (0, 7), (3, 5)]:
        assert f_minus(10.4, 1, 0.5, n, m) == f_minus(10.4, 1, 0.5, m, n)


def test_f_minus_positive_large_index():
    """ The positive series stays accurate where the direct sums cancel """
    F = f_minus_matrix(10.4, 2, 1.0, 60)
    assert np.all(F > 0)
    assert np.all(np.isfinite(F))


@pytest.mark.parametrize('args', [
    (0.5, 2, 0.0),
    (3.2, -1, 0.0),
    (3.2, 1, -0.5),
])
def test_f_minus_preconditions(args):
    nu, k, tau = args
    with pytest.raises(ParameterError):
        f_minus(nu, k, tau, 0, 0)


def test_oracle_properties():
    assert quad_oracle(3.2, MINUS, 0, 0.0, 2, 2) == approx(1.0, abs=1e-12)
    assert quad_oracle(3.2, MINUS, 0, 0.0, 1, 4) == approx(0.0, abs=1e-12)
    a = quad_oracle(3.2, MINUS, 1, 0.5, 2, 6)
    b = quad_oracle(3.2, MINUS, 1, 0.5, 6, 2)
    assert a == approx(b, abs=1e-14)
    assert quad_oracle(3.2, PLUS, 1, 0.0, 2, 3) == approx(
        f_plus(3.2, 1, 2, 3, 6), abs=1e-12)


def test_integral_key():
    key = IntegralKey(sign=MINUS, k=1, tau=0.0, nu=2.5)
    assert key.exponent == 1.5
    assert key.evaluate(0, 0) == approx(0.4)
    with pytest.raises(ParameterError):
        IntegralKey(sign=PLUS, k=1, tau=0.5, nu=2.5).validate()
    with pytest.raises(ParameterError):
        IntegralKey(sign=MINUS, k=3, tau=0.0, nu=1.5).validate()
    assert IntegralKey(sign=PLUS, k=1, nu=3.0).evaluate(2, 2) == approx(8.0)


def test_first_moment():
    #: F-(1, 0) at n = m = 0 is Gamma(nu) / Gamma(nu + 1)
    for nu in NUS:
        assert f_minus(nu, 1, 0.0, 0, 0) == approx(
            math.gamma(nu) / math.gamma(nu + 1), rel=1e-13)
