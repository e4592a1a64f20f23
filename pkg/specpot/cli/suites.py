"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 12, 2026

@author: specpot team

Self checks run by `specpot validate`.

"""
import numpy as np
from atom.api import Atom, Bool, Float, Str
from specpot.core.api import log, SpecpotError
from specpot.polynomial.models import PolyParams
from specpot.polynomial.cdh import orthogonality_matrix, spectrum_energies
from specpot.polynomial.hamiltonian import (
    build_sigma, hamiltonian_from_sigma, converged_energies, LADDER_TOL
)
from specpot.basis.models import BasisSpec, MORSE
from specpot.basis.integrals import (
    f_minus_matrix, f_plus_matrix, quad_oracle, PLUS, MINUS
)
from specpot.basis.kinetic import build_kinetic, t_oracle_matrix
from specpot.potential.models import REFERENCE_POTENTIALS
from specpot.potential.reconstruct import (
    reconstruct_potential, default_grid
)
from .config import PRESETS, RunConfig

#: Seed of the Sigma_00 perturbation
PERTURB_SEED = 1234

#: Size of the blocks compared against quadrature oracles
ORACLE_SIZE = 6


class CheckResult(Atom):
    """ Outcome of one check """
    suite = Str()
    name = Str()
    value = Float()
    tol = Float()
    passed = Bool()

    def row(self):
        return "{:<12} {:<44} {:>12.3e} {:>10.1e}  {}".format(
            self.suite, self.name, self.value, self.tol,
            "ok" if self.passed else "FAIL")


def _check(suite, name, value, tol):
    value = float(value)
    return CheckResult(suite=suite, name=name, value=value, tol=tol,
                       passed=bool(np.isfinite(value) and value <= tol))


def perturbed_hamiltonian(p, N, perturb):
    """ H from Sigma with a seeded offset of size ~perturb on Sigma_00 """
    sigma = build_sigma(p, N)
    if perturb:
        rng = np.random.default_rng(PERTURB_SEED)
        delta = perturb * rng.uniform(0.5, 1.5)
        log.info("Perturbing Sigma_00 by {:.6g}".format(delta))
        sigma = sigma.perturbed(0, 0, delta)
    return hamiltonian_from_sigma(sigma, p.lam)


def check_orthogonality(quad_order=None):
    results = []
    n_max = 6
    order = quad_order or 20
    p = PolyParams.create(-4.2, a=5.2, b=5.2)
    gram = orthogonality_matrix(p, n_max, order)
    results.append(_check('orthogonal', 'mixed mu=-4.2 a=b=5.2',
                          np.max(np.abs(gram - np.eye(n_max + 1))), 1e-8))
    p = PolyParams.create(0.7, a=1.3, b=0.9)
    gram = orthogonality_matrix(p, n_max, order)
    results.append(_check('orthogonal', 'continuous mu=0.7 a=1.3 b=0.9',
                          np.max(np.abs(gram - np.eye(n_max + 1))), 1e-10))
    return results


def _allclose_ratio(got, ref):
    """ Largest deviation over the allclose bound rel 1e-8, abs 1e-12 of
    the largest entry. At most one when every entry is within tolerance.

    """
    atol = 1e-12 * max(np.max(np.abs(ref)), 1.0)
    return np.max(np.abs(got - ref) / (1e-8 * np.abs(ref) + atol))


def _oracle_block(nu, sign, k, tau, quad_order):
    ref = np.zeros((ORACLE_SIZE, ORACLE_SIZE))
    for n in range(ORACLE_SIZE):
        for m in range(n, ORACLE_SIZE):
            ref[n, m] = ref[m, n] = quad_oracle(nu, sign, k, tau, n, m,
                                                quad_order)
    return ref


def check_integrals(quad_order=None):
    results = []
    for nu in (2.5, 3.2, 10.4):
        worst = 0.0
        for k in (0, 1, 2):
            for tau in (0.0, 0.5, 1.0):
                ref = _oracle_block(nu, MINUS, k, tau, quad_order)
                got = f_minus_matrix(nu, k, tau, ORACLE_SIZE)
                worst = max(worst, _allclose_ratio(got, ref))
        results.append(_check('integrals', 'F- vs quadrature nu={}'.format(
            nu), worst, 1.0))
        worst = 0.0
        for k in (0, 1, 2):
            ref = _oracle_block(nu, PLUS, k, 0.0, quad_order)
            got = f_plus_matrix(nu, k, ORACLE_SIZE).to_array()
            worst = max(worst, _allclose_ratio(got, ref))
        results.append(_check('integrals', 'F+ vs quadrature nu={}'.format(
            nu), worst, 1.0))
    return results


def check_kinetic(quad_order=None):
    results = []
    for name in sorted(PRESETS):
        config = RunConfig()
        config.apply_preset(name)
        spec = config.basis_spec()
        T = build_kinetic(spec, ORACLE_SIZE).matrix.to_array()
        ref = t_oracle_matrix(spec, ORACLE_SIZE, quad_order).to_array()
        #: Ratio to the allclose bound, at most one when within tolerance
        atol = 1e-12 * np.max(np.abs(ref))
        ratio = np.max(np.abs(T - ref) / (1e-7 * np.abs(ref) + atol))
        results.append(_check('kinetic', '{} {} allclose ratio'.format(
            name, spec.case_id), ratio, 1.0))
    return results


def check_morse(perturb=0.0, N=100):
    """ The Morse case is reproduced exactly by the one column method """
    lam, A = 1.0, -5.2
    p = PolyParams.create(A + 0.5, lam)
    spec = BasisSpec.for_case(MORSE, lam=lam, mu=p.mu)
    H = perturbed_hamiltonian(p, N, perturb)
    V = H - build_kinetic(spec, N).matrix
    results = [_check('morse', 'column 0 entries beyond m=2',
                      np.max(np.abs(V.column(0)[3:])), 1e-12)]
    xs = default_grid(spec)
    curve = reconstruct_potential(p, spec, N, 0, xs, vmatrix=V)
    exact = REFERENCE_POTENTIALS['morse'].potential(xs, lam, A)
    results.append(_check('morse', 'curve vs exact on [-5, 2]',
                          np.max(np.abs(curve.vs - exact)), 1e-8))
    return results


def check_ladder(config, perturb=0.0, N=200):
    """ Eigenvalues of the truncated H against the spectrum formula. Only
    levels that have settled between N and 2N are compared, the lowest
    level has to be one of them.

    """
    p = config.poly_params()
    ladder = spectrum_energies(p)
    eig, stable = converged_energies(
        p, N, LADDER_TOL,
        build=lambda p, n: perturbed_hamiltonian(p, n, perturb))
    results = [_check('ladder', 'settled levels N={} vs {}'.format(N, 2 * N),
                      0.0 if len(stable) and stable[0] else 1.0, 0.0)]
    if np.any(stable):
        error = np.abs(eig - ladder[:len(eig)])[stable]
        name = 'H eigenvalues N={} vs ladder'.format(N)
        results.append(_check('ladder', name, np.max(error), LADDER_TOL))
    return results


def run_suites(config, perturb=0.0, quad_order=None):
    """ Run every check and return the list of CheckResult. A check that
    raises counts as failed.

    """
    suites = [
        ('orthogonal', lambda: check_orthogonality(quad_order)),
        ('integrals', lambda: check_integrals(quad_order)),
        ('kinetic', lambda: check_kinetic(quad_order)),
        ('morse', lambda: check_morse(perturb)),
        ('ladder', lambda: check_ladder(config, perturb)),
    ]
    results = []
    for name, suite in suites:
        try:
            results.extend(suite())
        except SpecpotError as e:
            log.error("Suite {} raised: {}".format(name, e))
            results.append(CheckResult(suite=name, name=str(e),
                                       value=float('nan'), passed=False))
    return results
