"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 4, 2026

@author: specpot team
"""
import numpy as np
from specpot.core.api import SymMatrix, ParameterError, log
from .cdh import recursion_coefficients, spectrum_energies
from .models import SpectrumLadder

#: Truncation used when none is given
DEFAULT_ORDER = 100

#: Allowed deviation of the matrix spectrum from the ladder
LADDER_TOL = 1e-3

#: Doubling N may move a settled level by this fraction of the tolerance
STABILITY_FRACTION = 0.25


def build_sigma(p, N=DEFAULT_ORDER):
    """ Build the N x N tridiagonal recursion matrix Sigma.

    Parameters
    ----------
    p: PolyParams
        Polynomial parameters
    N: int
        Truncation order

    Returns
    -------
    sigma: SymMatrix
        Tridiagonal with bandwidth 1

    """
    if N < 1:
        raise ParameterError("Truncation order must be positive, got "
                             "{}".format(N))
    diag, off = recursion_coefficients(p, N - 1)
    return SymMatrix.tridiagonal(diag, off[:N - 1])


def hamiltonian_from_sigma(sigma, lam):
    """ H = lam^2 Sigma / 2 """
    return sigma.scaled(0.5 * lam ** 2)


def build_hamiltonian(p, N=DEFAULT_ORDER):
    """ Matrix of the Hamiltonian in the chosen basis, H = lam^2 Sigma / 2 """
    H = hamiltonian_from_sigma(build_sigma(p, N), p.lam)
    log.debug("Built {}x{} Hamiltonian for {}".format(N, N, p))
    return H


def energy_ladder(p):
    """ E_k = -lam^2 (k + mu)^2 / 2 for k = 0..floor(-mu) """
    return SpectrumLadder(energies=spectrum_energies(p), params=p)


def eigen_energies(p, N=DEFAULT_ORDER, H=None):
    """ The lowest negative eigenvalues of the truncated Hamiltonian, at
    most floor(-mu) + 1 of them. Near the threshold a truncated level can
    still be at or above zero and is then left out.

    """
    H = build_hamiltonian(p, N) if H is None else H
    values = np.sort(H.eigenvalues())
    return values[values < 0][:p.bound_count]


def converged_energies(p, N=DEFAULT_ORDER, tol=LADDER_TOL, build=None):
    """ Eigen energies at N together with a mask of the levels that have
    settled. A level is settled when doubling N moves it by at most
    STABILITY_FRACTION * tol.

    Parameters
    ----------
    p: PolyParams
    N: int
        Truncation order
    tol: float
        Tolerance the settled levels are later compared with
    build: callable
        build(p, N) returning the Hamiltonian, `build_hamiltonian` by default

    Returns
    -------
    result: tuple
        The eigen energies at N and a boolean mask of the same length.

    """
    build = build or build_hamiltonian
    a = eigen_energies(p, N, build(p, N))
    b = eigen_energies(p, 2 * N, build(p, 2 * N))
    a = a[:len(b)]
    stable = np.abs(a - b[:len(a)]) <= STABILITY_FRACTION * tol
    log.debug("Levels settled between N={} and {}: {}".format(
        N, 2 * N, np.flatnonzero(stable).tolist()))
    return a, stable
