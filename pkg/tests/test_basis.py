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
from scipy.special import gammaln
from scipy.integrate import trapezoid

from specpot.core.api import ParameterError, DomainError
from specpot.basis.models import (
    BasisSpec, COULOMB_LINEAR, OSCILLATOR, LOG, MORSE, CASES
)
from specpot.basis.laguerre import (
    coord_map, coord_jacobian, coord_inverse, eval_basis, eval_basis_all,
    eval_basis_deriv, gauss_laguerre, overlap_matrix, default_quad_order,
    DEFAULT_QUAD_ORDER
)

#: One basis per case at the worked example parameters
SPECS = {
    COULOMB_LINEAR: dict(lam=1.0, ell=3),
    OSCILLATOR: dict(lam=1.0, ell=2),
    LOG: dict(lam=5.0, mu=-4.2, gamma=2.0),
    MORSE: dict(lam=1.0, mu=-4.7),
}

#: Interior sample points per case
SAMPLES = {
    COULOMB_LINEAR: np.linspace(0.05, 8, 13),
    OSCILLATOR: np.linspace(0.05, 4, 13),
    LOG: np.linspace(0.01, 1, 13),
    MORSE: np.linspace(-5, 2, 13),
}


def make_spec(case_id):
    return BasisSpec.for_case(case_id, **SPECS[case_id])


def test_linkage():
    assert make_spec(COULOMB_LINEAR).nu == 8
    assert make_spec(OSCILLATOR).nu == 2.5
    assert make_spec(LOG).nu == approx(9.4)
    assert make_spec(MORSE).nu == approx(10.4)


@pytest.mark.parametrize('case_id, exponents', [
    (COULOMB_LINEAR, lambda nu, g: (nu, 1)),
    (OSCILLATOR, lambda nu, g: (nu + 0.5, 1)),
    (LOG, lambda nu, g: (nu, 1 + 1 / g)),
    (MORSE, lambda nu, g: (nu + 1, 1)),
])
def test_exponents(case_id, exponents):
    spec = make_spec(case_id)
    a2, b2 = exponents(spec.nu, spec.gamma)
    assert 2 * spec.alpha == approx(a2)
    assert 2 * spec.beta == approx(b2)


@pytest.mark.parametrize('kwargs', [
    dict(case_id=COULOMB_LINEAR, ell=3, nu=7.0),
    dict(case_id=OSCILLATOR, ell=2, nu=2.0),
    dict(case_id=LOG, gamma=-1.0, mu=-4.2),
    dict(case_id=MORSE, lam=-1.0, mu=-4.7),
    dict(case_id=MORSE, nu=-1.5),
    dict(case_id=MORSE),
    dict(case_id='JACOBI', mu=-4.2),
])
def test_invalid_specs(kwargs):
    with pytest.raises(ParameterError):
        BasisSpec.for_case(**kwargs)


def test_coord_map_values():
    assert coord_map(make_spec(LOG), 0.0) == 0.0
    assert coord_map(make_spec(MORSE), 0.0) == 1.0
    spec = BasisSpec.for_case(OSCILLATOR, lam=2.0, ell=0)
    assert coord_map(spec, 1.5) == approx(9.0)


@pytest.mark.parametrize('case_id', CASES)
def test_coord_inverse(case_id):
    spec = make_spec(case_id)
    xs = SAMPLES[case_id]
    assert coord_inverse(spec, coord_map(spec, xs)) == approx(xs, rel=1e-12)


@pytest.mark.parametrize('case_id', CASES)
def test_coord_jacobian(case_id):
    spec = make_spec(case_id)
    xs, h = SAMPLES[case_id], 1e-6
    fd = (coord_map(spec, xs + h) - coord_map(spec, xs - h)) / (2 * h)
    assert coord_jacobian(spec, xs) == approx(fd, rel=1e-7)


@pytest.mark.parametrize('case_id', [COULOMB_LINEAR, OSCILLATOR, LOG])
def test_domain_error(case_id):
    with pytest.raises(DomainError):
        coord_map(make_spec(case_id), -0.1)
    with pytest.raises(DomainError):
        eval_basis(make_spec(case_id), 0, [0.5, -1.0])


def test_boundary_limit():
    spec = make_spec(COULOMB_LINEAR)
    assert eval_basis(spec, 0, 0.0) == 0.0
    assert eval_basis(make_spec(MORSE), 2, -np.inf) == 0.0


def test_morse_ground_state():
    spec = make_spec(MORSE)
    nu = spec.nu
    xs = SAMPLES[MORSE]
    a0 = math.exp(-0.5 * gammaln(nu + 1))
    expected = a0 * np.exp(xs * (nu + 1) / 2) * np.exp(-0.5 * np.exp(xs))
    assert eval_basis(spec, 0, xs) == approx(expected, rel=1e-12)


@pytest.mark.parametrize('case_id', CASES)
def test_ground_state_nodeless(case_id):
    spec = make_spec(case_id)
    lo, hi = SAMPLES[case_id][0], SAMPLES[case_id][-1]
    phi = eval_basis(spec, 0, np.linspace(lo, hi, 10000))
    assert np.all(phi > 0)


@pytest.mark.parametrize('case_id', CASES)
def test_orthonormal(case_id):
    spec = make_spec(case_id)
    gram = overlap_matrix(spec, 11)
    assert np.max(np.abs(gram - np.eye(11))) <= 1e-10


def test_orthonormal_in_x():
    """ Trapezoid check of the normalization directly in x """
    spec = BasisSpec.for_case(OSCILLATOR, lam=1.3, ell=1)
    x = np.linspace(0, 8, 20001)
    phi = eval_basis_all(spec, 4, x)
    gram = trapezoid(phi[:, None, :] * phi[None, :, :], x, axis=-1)
    assert gram == approx(np.eye(4), abs=1e-6)


def test_completeness():
    """ Projecting phi_3 onto phi_0..phi_10 recovers a unit vector """
    spec = make_spec(MORSE)
    C, q, r = spec.jacobian_form
    s, p = 2 * spec.alpha - q, 2 * spec.beta + r
    t, w = gauss_laguerre(40, s)
    x = coord_inverse(spec, t / p)
    phi = eval_basis_all(spec, 11, x)
    #: Remove the weight the rule already carries
    jac = coord_jacobian(spec, x)
    g = t ** (-s) * np.exp(t) / jac / p
    coef = (phi * (w * g)) @ phi[3]
    expected = np.zeros(11)
    expected[3] = 1.0
    assert coef == approx(expected, abs=1e-10)


@pytest.mark.parametrize('case_id', CASES)
def test_basis_derivative(case_id):
    spec = make_spec(case_id)
    xs, h = SAMPLES[case_id], 1e-6
    for n in (0, 3):
        fd = (eval_basis(spec, n, xs + h) - eval_basis(spec, n, xs - h)) / (
            2 * h)
        got = eval_basis_deriv(spec, n, xs)
        assert got == approx(fd, rel=1e-5, abs=1e-7)


@pytest.mark.parametrize('order, s', [(5, 0.0), (20, 2.5), (48, 10.4)])
def test_gauss_laguerre(order, s):
    t, w = gauss_laguerre(order, s)
    assert np.all(np.diff(t) > 0)
    assert np.sum(w) == approx(math.gamma(s + 1), rel=1e-12)
    #: Exact for t^(2 order - 1)
    k = 2 * order - 1
    expected = math.exp(gammaln(s + k + 1))
    assert np.sum(w * t ** k) == approx(expected, rel=1e-8)


def test_gauss_laguerre_read_only():
    t, w = gauss_laguerre(10, 1.5)
    with pytest.raises(ValueError):
        t[0] = 0.0
    assert gauss_laguerre(10, 1.5)[0] is t


def test_gauss_laguerre_rejects():
    with pytest.raises(ParameterError):
        gauss_laguerre(0)
    with pytest.raises(ParameterError):
        gauss_laguerre(200)
    with pytest.raises(ParameterError):
        gauss_laguerre(10, -1.0)


def test_quad_order_env(monkeypatch):
    monkeypatch.delenv('SPECPOT_QUAD_ORDER', raising=False)
    assert default_quad_order() == DEFAULT_QUAD_ORDER
    monkeypatch.setenv('SPECPOT_QUAD_ORDER', '48')
    assert default_quad_order() == 48
    monkeypatch.setenv('SPECPOT_QUAD_ORDER', 'many')
    assert default_quad_order() == DEFAULT_QUAD_ORDER


def test_spec_json_round_trip():
    from specpot.core.api import dumps, loads
    spec = make_spec(LOG)
    restored = loads(dumps(spec), BasisSpec)
    assert restored.case_id == LOG
    assert restored.nu == spec.nu
    assert restored.gamma == spec.gamma
