"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 5, 2026

@author: specpot team

Coordinate maps, evaluation of the Laguerre basis and Gauss-Laguerre rules.

"""
import os
import functools
import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln
from specpot.core.api import log, DomainError, ParameterError
from specpot.core.specfun import laguerre_table
from .models import COULOMB_LINEAR, OSCILLATOR, LOG, MORSE

#: Gauss-Laguerre weights overflow beyond this order
MAX_QUAD_ORDER = 128

#: Starting order for escalating quadratures
DEFAULT_QUAD_ORDER = 32


def default_quad_order():
    """ Starting quadrature order, SPECPOT_QUAD_ORDER overrides it """
    value = os.environ.get('SPECPOT_QUAD_ORDER')
    if not value:
        return DEFAULT_QUAD_ORDER
    try:
        order = int(value)
    except ValueError:
        log.warning("Ignoring invalid SPECPOT_QUAD_ORDER={}".format(value))
        return DEFAULT_QUAD_ORDER
    return max(1, min(order, MAX_QUAD_ORDER))


# -----------------------------------------------------------------------------
# Coordinate maps
# -----------------------------------------------------------------------------
def _check_domain(spec, x):
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)):
        raise DomainError("Coordinate is NaN")
    lo, hi = spec.domain
    if np.any(x < lo) or np.any(x > hi):
        bad = x[(x < lo) | (x > hi)].ravel()[0]
        raise DomainError("x={} is outside the {} domain [{}, {}]".format(
            bad, spec.case_id, lo, hi))
    return x


def coord_map(spec, x):
    """ y(x) for the case of the basis.

    Raises
    ------
    DomainError
        If x is outside the domain.

    """
    x = _check_domain(spec, x)
    lam = spec.lam
    if spec.case_id == COULOMB_LINEAR:
        y = lam * x
    elif spec.case_id == OSCILLATOR:
        y = (lam * x) ** 2
    elif spec.case_id == LOG:
        y = spec.gamma * np.log1p(lam * x)
    else:
        with np.errstate(over='ignore'):
            y = np.exp(lam * x)
    return y if y.ndim else float(y)


def jacobian_at(spec, y):
    """ dy/dx as a function of y """
    C, q, r = spec.jacobian_form
    y = np.asarray(y, dtype=float)
    with np.errstate(divide='ignore'):
        return C * y ** q * np.exp(r * y)


def coord_jacobian(spec, x):
    """ dy/dx at x, used for the measure dx = dy / y' """
    j = jacobian_at(spec, coord_map(spec, x))
    return j if j.ndim else float(j)


def coord_inverse(spec, y):
    """ x(y), the inverse of coord_map """
    y = np.asarray(y, dtype=float)
    if np.any(y < 0) or (spec.case_id == MORSE and np.any(y <= 0)):
        raise DomainError("y={} is outside the range of the {} map".format(
            y, spec.case_id))
    lam = spec.lam
    if spec.case_id == COULOMB_LINEAR:
        x = y / lam
    elif spec.case_id == OSCILLATOR:
        x = np.sqrt(y) / lam
    elif spec.case_id == LOG:
        x = np.expm1(y / spec.gamma) / lam
    else:
        x = np.log(y) / lam
    return x if x.ndim else float(x)


# -----------------------------------------------------------------------------
# Basis evaluation
# -----------------------------------------------------------------------------
def log_norm(spec, n):
    """ log of sqrt(c lam) A_n with A_n = sqrt(n! / Gamma(n + nu + 1)) """
    n = np.asarray(n, dtype=float)
    return 0.5 * (np.log(spec.norm * spec.lam) + gammaln(n + 1) -
                  gammaln(n + spec.nu + 1))


def normalized_laguerre(spec, N, y):
    """ Table of A_m L_m^nu(y) for m = 0..N-1 along the first axis. The
    envelope shared by every basis element is left out.

    """
    table = laguerre_table(N - 1, spec.nu, y)
    a = np.exp(0.5 * (gammaln(np.arange(N) + 1.0) -
                      gammaln(np.arange(N) + spec.nu + 1)))
    return table * a.reshape((N,) + (1,) * (table.ndim - 1))


def _power(y, a):
    """ y^a with the limit 0^a = 0 for a > 0 and 1 for a = 0 """
    with np.errstate(divide='ignore', invalid='ignore'):
        out = np.where(y > 0, y ** a, 0.0 if a > 0 else (1.0 if a == 0
                                                        else np.inf))
    return out


def envelope(spec, y):
    """ sqrt(c lam) y^alpha e^{-beta y}, the factor shared by all phi_n.
    The power is taken in log space so large y does not overflow.

    """
    y = np.asarray(y, dtype=float)
    pre = 0.5 * np.log(spec.norm * spec.lam)
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        logv = pre + spec.alpha * np.log(y) - spec.beta * y
        v = np.exp(logv)
    return np.where(y > 0, v, np.sqrt(spec.norm * spec.lam) *
                    _power(y, spec.alpha))


def eval_basis_all(spec, N, x):
    """ phi_0(x) .. phi_{N-1}(x) along the first axis.

    Parameters
    ----------
    spec: BasisSpec
    N: int
        Number of basis elements
    x: float or array
        Points inside the domain. Boundary points give the limit value.

    """
    if N < 1:
        raise ParameterError("Basis size must be positive")
    y = np.asarray(coord_map(spec, x), dtype=float)
    return normalized_laguerre(spec, N, y) * envelope(spec, y)


def eval_basis(spec, n, x):
    """ phi_n(x) = sqrt(c lam) A_n y^alpha e^{-beta y} L_n^nu(y) """
    v = eval_basis_all(spec, n + 1, x)[n]
    return v if v.ndim else float(v)


def basis_deriv_y(spec, N, y):
    """ d phi_n / dy for n = 0..N-1 using

        d/dy [y^a e^{-b y} L_n] = y^{a-1} e^{-b y}
            [(a + n - b y) L_n - (n + nu) L_{n-1}]

    Returns the table without the y^{alpha-1} e^{-beta y} factor and that
    factor separately so callers can fold it into a quadrature weight.

    """
    y = np.asarray(y, dtype=float)
    nu, a, b = spec.nu, spec.alpha, spec.beta
    L = laguerre_table(N - 1, nu, y)
    n = np.arange(N, dtype=float).reshape((N,) + (1,) * y.ndim)
    Q = (a + n - b * y) * L
    if N > 1:
        Q[1:] -= (n[1:] + nu) * L[:-1]
    lognorm = log_norm(spec, np.arange(N)).reshape(n.shape)
    return np.exp(lognorm) * Q


def eval_basis_deriv(spec, n, x):
    """ d phi_n / dx = y'(x) d phi_n / dy """
    y = np.asarray(coord_map(spec, x), dtype=float)
    C, q, r = spec.jacobian_form
    Q = basis_deriv_y(spec, n + 1, y)[n]
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        f = np.exp((spec.alpha - 1 + q) * np.log(y) + (r - spec.beta) * y)
    f = np.where(y > 0, f, _power(y, spec.alpha - 1 + q))
    v = C * f * Q
    return v if v.ndim else float(v)


# -----------------------------------------------------------------------------
# Gauss-Laguerre rules
# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=256)
def _gauss_laguerre(order, s):
    n = order
    i = np.arange(n, dtype=float)
    diag = 2 * i + s + 1
    off = np.sqrt(i[1:] * (i[1:] + s))
    if n == 1:
        x = diag.copy()
    else:
        x = eigh_tridiagonal(diag, off, eigvals_only=True)

    #: Polish the roots
    for it in range(3):
        L = laguerre_table(n, s, x)
        dL = -laguerre_table(n - 1, s + 1, x)[n - 1]
        x = x - L[n] / dL

    dL = -laguerre_table(n - 1, s + 1, x)[n - 1]
    logw = (gammaln(n + s + 1) - gammaln(n + 1) - np.log(x) -
            2 * np.log(np.abs(dL)))
    w = np.exp(logw)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_laguerre(order, s=0.0):
    """ Nodes and weights for int_0^inf t^s e^{-t} f(t) dt.

    Nodes come from the eigenvalues of the Laguerre Jacobi matrix and are
    polished by Newton steps. The weights are formed in log space. The
    returned arrays are read only and shared between callers.

    Parameters
    ----------
    order: int
        Number of nodes, 1..MAX_QUAD_ORDER
    s: float
        Weight exponent, s > -1

    """
    order = int(order)
    if not 1 <= order <= MAX_QUAD_ORDER:
        raise ParameterError("Gauss-Laguerre order must be in 1..{}, got "
                             "{}".format(MAX_QUAD_ORDER, order))
    if not s > -1:
        raise ParameterError("Gauss-Laguerre exponent must exceed -1, got "
                             "{}".format(s))
    return _gauss_laguerre(order, float(s))


def overlap_matrix(spec, N, order=None):
    """ Gram matrix <phi_n|phi_m> for n, m < N by Gauss-Laguerre quadrature
    in y with the measure dy / y'. The weight exponents are taken from the
    basis itself so a wrong (alpha, beta) shows up as a non identity result.

    """
    C, q, r = spec.jacobian_form
    s = 2 * spec.alpha - q
    p = 2 * spec.beta + r
    if order is None:
        order = min(MAX_QUAD_ORDER, max(default_quad_order(), N + 2))
    t, w = gauss_laguerre(order, s)
    y = t / p
    L = normalized_laguerre(spec, N, y)
    scale = spec.norm * spec.lam / C * p ** (-(s + 1))
    return scale * (L * w) @ L.T
