"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 15, 2026

@author: specpot team
"""
import math
import logging
import pytest
import numpy as np
from pytest import approx

from specpot.core.api import ParameterError, ConfigError
from specpot.basis.models import (
    BasisSpec, COULOMB_LINEAR, OSCILLATOR, LOG, MORSE, CASES
)
from specpot.basis.integrals import j_matrix
from specpot.basis.kinetic import (
    REGISTRY, ANALYTIC, ORACLE, KineticBuild, build_kinetic, t_coulomb_linear,
    t_oscillator, t_log, t_morse, t_oracle, t_oracle_matrix
)

#: Worked example bases
SPECS = {
    COULOMB_LINEAR: dict(lam=1.0, ell=3),
    OSCILLATOR: dict(lam=1.0, ell=2),
    LOG: dict(lam=5.0, mu=-4.2, gamma=2.0),
    MORSE: dict(lam=1.0, mu=-4.7),
}

BUILDERS = {
    COULOMB_LINEAR: t_coulomb_linear,
    OSCILLATOR: t_oscillator,
    LOG: t_log,
    MORSE: t_morse,
}


def make_spec(case_id, **overrides):
    kwargs = dict(SPECS[case_id])
    kwargs.update(overrides)
    return BasisSpec.for_case(case_id, **kwargs)


@pytest.fixture(scope="module")
def oracles():
    return {c: t_oracle_matrix(make_spec(c), 7).to_array() for c in CASES}


def test_registry():
    assert sorted(REGISTRY) == sorted(CASES)


@pytest.mark.parametrize('case_id', CASES)
def test_analytic_vs_oracle(oracles, case_id):
    T = BUILDERS[case_id](make_spec(case_id), 7).to_array()
    ref = oracles[case_id]
    assert T == approx(ref, rel=1e-7, abs=1e-12 * np.max(np.abs(ref)))


@pytest.mark.parametrize('case_id', CASES)
def test_symmetric(case_id):
    T = BUILDERS[case_id](make_spec(case_id), 12).to_array()
    assert np.array_equal(T, T.T)


@pytest.mark.parametrize('case_id', CASES)
def test_lambda_scaling(case_id):
    T1 = BUILDERS[case_id](make_spec(case_id, lam=1.0), 8).to_array()
    T3 = BUILDERS[case_id](make_spec(case_id, lam=3.0), 8).to_array()
    assert T3 == approx(9 * T1, rel=1e-12, abs=1e-14 * np.max(np.abs(T3)))


def test_bandwidths():
    assert t_oscillator(make_spec(OSCILLATOR), 10).bandwidth == 1
    assert t_morse(make_spec(MORSE), 10).bandwidth == 2
    assert t_coulomb_linear(make_spec(COULOMB_LINEAR), 10).bandwidth is None
    assert t_log(make_spec(LOG), 10).bandwidth is None


def test_coulomb_linear_values():
    T = t_coulomb_linear(make_spec(COULOMB_LINEAR), 5)
    assert T.entry(0, 0) == approx(0.125, rel=1e-15)
    assert T.entry(1, 3) == T.entry(3, 1)


def test_oscillator_values():
    spec = make_spec(OSCILLATOR)
    T = t_oscillator(spec, 5)
    ell = spec.ell
    assert T.entry(0, 0) == approx(0.5 * (ell + 1.5), rel=1e-15)
    assert T.entry(0, 0) == approx(1.75)
    #: Off-diagonal sqrt(n (n + nu)) / 2 with n = 1, nu = ell + 1/2
    assert T.entry(1, 0) == approx(0.5 * math.sqrt(ell + 1.5), rel=1e-15)
    assert t_oracle(spec, 1, 0) == approx(T.entry(1, 0), rel=1e-10)


def test_morse_values():
    spec = make_spec(MORSE)
    nu = spec.nu
    J2 = (j_matrix(nu, 3).to_array() @ j_matrix(nu, 3).to_array())[0, 0]
    assert J2 == approx((nu + 1) ** 2 + (nu + 1))
    expected = 0.25 * (-0.5 * J2 + (nu + 1) ** 2 + 0.5 * (1 - nu ** 2))
    assert t_morse(spec, 4).entry(0, 0) == approx(expected, rel=1e-14)


def test_morse_block_exact():
    """ The leading block does not depend on the size it was built at """
    spec = make_spec(MORSE)
    small = t_morse(spec, 6).to_array()
    large = t_morse(spec, 20).to_array()[:6, :6]
    assert small == approx(large, rel=1e-14, abs=1e-14)


def test_log_requires_nu():
    spec = BasisSpec.for_case(LOG, lam=1.0, gamma=2.0, nu=0.5)
    with pytest.raises(ParameterError):
        t_log(spec, 4)


def test_linkage_errors():
    with pytest.raises(ParameterError):
        t_oscillator(make_spec(MORSE), 4)
    spec = make_spec(COULOMB_LINEAR)
    spec.nu = 5.0
    with pytest.raises(ParameterError):
        t_coulomb_linear(spec, 4)


def test_oracle_without_orbital_term():
    """ With l = 0 the orbital term vanishes and the oracle still agrees """
    spec = BasisSpec.for_case(COULOMB_LINEAR, lam=1.0, ell=0)
    T = t_coulomb_linear(spec, 6).to_array()
    ref = t_oracle_matrix(spec, 6).to_array()
    assert T == approx(ref, rel=1e-7)


def test_oracle_symmetric(oracles):
    for ref in oracles.values():
        assert np.array_equal(ref, ref.T)


def test_oscillator_oracle_tight(oracles):
    T = t_oscillator(make_spec(OSCILLATOR), 7).to_array()
    assert T == approx(oracles[OSCILLATOR], abs=1e-10)


def test_build_kinetic():
    spec = make_spec(MORSE)
    build = build_kinetic(spec, 8, check=True)
    assert isinstance(build, KineticBuild)
    assert build.method == ANALYTIC
    assert 0 <= build.deviation <= 1e-7
    oracle = build_kinetic(spec, 6, method=ORACLE)
    assert oracle.method == ORACLE
    assert oracle.deviation == -1.0
    with pytest.raises(ConfigError):
        build_kinetic(spec, 6, method='SPLINE')
    with pytest.raises(ParameterError):
        build_kinetic(spec, 0)


def test_build_kinetic_logs_mismatch(caplog, monkeypatch):
    """ A wrong analytic matrix is reported against the oracle """
    import specpot.basis.kinetic as kinetic
    spec = make_spec(OSCILLATOR)
    broken = lambda self, spec, N: t_oscillator(spec, N).scaled(1.01)
    monkeypatch.setattr(kinetic.OscillatorKinetic, 'build', broken)
    with caplog.at_level(logging.WARNING, logger='specpot'):
        build = build_kinetic(spec, 6, check=True)
    assert build.deviation > 1e-3
    assert any('differs from the oracle' in r.message
               for r in caplog.records)
