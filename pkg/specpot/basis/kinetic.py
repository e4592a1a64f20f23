"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 7, 2026

@author: specpot team

Kinetic energy matrices T_{n,m} = <phi_n| -1/2 d^2/dx^2 (+ l(l+1)/2x^2) |phi_m>

"""
import numpy as np
from atom.api import Atom, Enum, Float, Int, Typed
from specpot.core.api import (
    Model, SymMatrix, log, find_subclasses, ParameterError, ConvergenceError,
    ConfigError, DomainError
)
from specpot.core.specfun import log_poch
from .models import BasisSpec, COULOMB_LINEAR, OSCILLATOR, LOG, MORSE
from .laguerre import (
    gauss_laguerre, default_quad_order, basis_deriv_y, normalized_laguerre,
    coord_map, coord_inverse, jacobian_at, MAX_QUAD_ORDER
)
from .integrals import j_matrix, f_minus_matrix

ANALYTIC = 'ANALYTIC'
ORACLE = 'ORACLE'

#: Relative change below which the oracle is considered settled
ORACLE_TOL = 1e-10

#: Leading block compared against the oracle when checking
CHECK_SIZE = 8

#: Element-wise tolerance of the analytic vs oracle check
CHECK_RTOL = 1e-7

#: Entries below this fraction of the largest are compared in absolute terms
CHECK_FLOOR = 1e-6


class KineticBuild(Model):
    """ A kinetic matrix together with how it was made """
    spec = Typed(BasisSpec).tag(config=True)
    N = Int().tag(config=True)
    matrix = Typed(SymMatrix).tag(config=True)
    method = Enum(ANALYTIC, ORACLE).tag(config=True)

    #: Largest element-wise deviation from the oracle, -1 when not checked
    deviation = Float(-1.0).tag(config=True)


def _require(spec, case_id):
    if spec.case_id != case_id:
        raise ParameterError("Expected a {} basis, got {}".format(
            case_id, spec.case_id))
    spec.validate()


# -----------------------------------------------------------------------------
# Analytic builders
# -----------------------------------------------------------------------------
def t_coulomb_linear(spec, N):
    """ Dense kinetic matrix for y = lam x with nu = 2(l + 1), orbital term
    included.

        4 T / lam^2 = 1/2 + 2n/(2l+3)                       n = m
                    = sqrt((n+1)_nu / (m+1)_nu) (1 + 2n/(2l+3))   n < m

    The Pochhammer ratio is formed from log-Gamma differences.

    """
    _require(spec, COULOMB_LINEAR)
    nu, ell = spec.nu, spec.ell
    n = np.arange(N, dtype=float)
    lo = np.minimum.outer(n, n)
    hi = np.maximum.outer(n, n)
    ratio = np.exp(0.5 * (log_poch(lo + 1, nu) - log_poch(hi + 1, nu)))
    T = ratio * (1 + 2 * lo / (2 * ell + 3))
    T[np.diag_indices(N)] = 0.5 + 2 * n / (2 * ell + 3)
    return SymMatrix.from_array(0.25 * spec.lam ** 2 * T)


def t_oscillator(spec, N):
    """ Tridiagonal kinetic matrix for y = (lam x)^2 with nu = l + 1/2 """
    _require(spec, OSCILLATOR)
    ell = spec.ell
    n = np.arange(N, dtype=float)
    diag = 2 * n + ell + 1.5
    off = np.sqrt((n[:-1] + 1) * (n[:-1] + ell + 1.5))
    return SymMatrix.tridiagonal(0.5 * spec.lam ** 2 * diag,
                                 0.5 * spec.lam ** 2 * off)


def t_log(spec, N):
    """ Dense kinetic matrix for y = g ln(1 + lam x), tau = 2/g.

    Assembled from F-(k, tau) matrices, with X the half built from the
    action on phi_m and T = (g lam)^2 (X + X^T) / 4.

    """
    _require(spec, LOG)
    nu = spec.nu
    if not nu > 1:
        raise ParameterError("The log basis needs nu > 1, got {}".format(nu))
    tau = 2 / spec.gamma
    F0 = f_minus_matrix(nu, 0, tau, N)
    F1 = f_minus_matrix(nu, 1, tau, N)
    F2 = f_minus_matrix(nu, 2, tau, N)
    m = np.arange(N, dtype=float)[None, :]
    X = (-0.25 * (1 + tau / 2) * (1 + 3 * tau / 2) * F0 +
         (1 + tau) * (m + nu / 2) * F1 +
         0.5 * (2 * m + nu - nu ** 2 / 2) * F2)

    #: Terms with L_{m-1}, empty for m = 0
    shift = np.zeros((N, N))
    shift[:, 1:] = tau * F1[:, :-1] + F2[:, :-1]
    X -= np.sqrt(m * (m + nu)) * shift

    T = 0.25 * (spec.gamma * spec.lam) ** 2 * (X + X.T)
    return SymMatrix.from_array(T)


def t_morse(spec, N):
    """ Penta-diagonal kinetic matrix for y = exp(lam x).

        4 T / lam^2 = -J^2 / 2 + ((2n+nu+1)^2 + (1-nu^2)/2) delta
                      - (2n+nu) sqrt(n(n+nu)) delta_{n,m+1}
                      - (2n+nu+2) sqrt((n+1)(n+nu+1)) delta_{n,m-1}

    J is built two rows larger so the N x N block of J^2 is exact.

    """
    _require(spec, MORSE)
    nu = spec.nu
    J = j_matrix(nu, N + 2).to_array()
    J2 = (J @ J)[:N, :N]
    n = np.arange(N, dtype=float)
    A = -0.5 * J2
    A[np.diag_indices(N)] += (2 * n + nu + 1) ** 2 + 0.5 * (1 - nu ** 2)
    k = n[:-1]
    off = -(2 * k + nu + 2) * np.sqrt((k + 1) * (k + nu + 1))
    A += np.diag(off, 1) + np.diag(off, -1)
    T = 0.25 * spec.lam ** 2 * A
    return SymMatrix.from_array(0.5 * (T + T.T), bandwidth=2)


# -----------------------------------------------------------------------------
# Quadrature oracle
# -----------------------------------------------------------------------------
def _oracle_estimate(spec, N, order):
    """ One fixed order estimate of the full N x N matrix using

        T_{n,m} = 1/2 int y' phi_n,y phi_m,y dy
                  + l(l+1)/2 int phi_n phi_m / (x^2 y') dy

    with a Gauss-Laguerre rule matched to the y^s e^{-p y} part.

    """
    C, q, r = spec.jacobian_form
    a, b = spec.alpha, spec.beta
    s = 2 * a - 2 + q
    p = 2 * b - r
    if not s > -1:
        raise ParameterError(
            "Kinetic integrand of {} is not integrable".format(spec))
    t, w = gauss_laguerre(order, s)
    y = t / p
    D = basis_deriv_y(spec, N, y)
    T = 0.5 * C * p ** (-(s + 1)) * (D * w) @ D.T

    if spec.is_radial and spec.ell > 0:
        x = coord_inverse(spec, y)
        g = (y ** (2 * a - s) * np.exp((p - 2 * b) * y) /
             (x ** 2 * jacobian_at(spec, y)))
        L = normalized_laguerre(spec, N, y)
        orbital = (spec.norm * spec.lam * p ** (-(s + 1)) *
                   (L * (w * g)) @ L.T)
        T += 0.5 * spec.ell * (spec.ell + 1) * orbital
    return 0.5 * (T + T.T)


def t_oracle_matrix(spec, N, order=None):
    """ The N x N kinetic matrix by quadrature in y. The order grows in
    steps of 16 until the largest relative change is below ORACLE_TOL.

    Raises
    ------
    ConvergenceError
        If the estimates do not settle before MAX_QUAD_ORDER.

    """
    spec.validate()
    order = order or default_quad_order()
    order = min(max(int(order), N + 2), MAX_QUAD_ORDER - 16)
    last = _oracle_estimate(spec, N, order)
    while order < MAX_QUAD_ORDER:
        order = min(order + 16, MAX_QUAD_ORDER)
        T = _oracle_estimate(spec, N, order)
        change = np.max(np.abs(T - last)) / max(np.max(np.abs(T)), 1e-300)
        log.debug("Kinetic oracle for {} at order {}: change {:.3g}".format(
            spec, order, change))
        if change < ORACLE_TOL:
            return SymMatrix.from_array(T)
        last = T
    raise ConvergenceError("Kinetic oracle for {} did not settle by order "
                           "{}".format(spec, MAX_QUAD_ORDER))


def t_oracle(spec, n, m, order=None):
    """ <phi_n|T|phi_m> by quadrature """
    return t_oracle_matrix(spec, max(n, m) + 1, order).entry(n, m)


def local_kinetic(spec, x):
    """ (T phi_0)(x) / phi_0(x) in closed form, the value the column 0 sum
    of the kinetic matrix tends to as N grows.

    With phi_0 ~ y^alpha e^{-beta y}, y' = C y^q e^{r y} and
    g = alpha / y - beta

        T phi_0 / phi_0 = -y'^2 (g^2 - alpha / y^2 + (q / y + r) g) / 2

    plus l(l+1)/2x^2 in the radial cases.

    Raises
    ------
    DomainError
        If a point maps to y = 0 where the expression is singular.

    """
    spec.validate()
    x = np.asarray(x, dtype=float)
    y = np.asarray(coord_map(spec, x), dtype=float)
    if np.any(y <= 0):
        raise DomainError("Kinetic term of phi_0 is singular at x={}".format(
            np.atleast_1d(x)[np.atleast_1d(y) <= 0][0]))
    _, q, r = spec.jacobian_form
    a = spec.alpha
    g = a / y - spec.beta
    t = -0.5 * jacobian_at(spec, y) ** 2 * (g ** 2 - a / y ** 2 +
                                            (q / y + r) * g)
    if spec.is_radial:
        t = t + 0.5 * spec.ell * (spec.ell + 1) / x ** 2
    return t if t.ndim else float(t)


# -----------------------------------------------------------------------------
# Handlers
# -----------------------------------------------------------------------------
class KineticHandler(Atom):
    #: Case id this handler builds
    name = ''

    def build(self, spec, N):
        """ Build the analytic kinetic matrix.

        Parameters
        ----------
        spec: BasisSpec
            The basis. Its case must match the handler.
        N: int
            Matrix order

        Returns
        -------
        matrix: SymMatrix

        """
        raise NotImplementedError()


class CoulombLinearKinetic(KineticHandler):
    name = COULOMB_LINEAR

    def build(self, spec, N):
        return t_coulomb_linear(spec, N)


class OscillatorKinetic(KineticHandler):
    name = OSCILLATOR

    def build(self, spec, N):
        return t_oscillator(spec, N)


class LogKinetic(KineticHandler):
    name = LOG

    def build(self, spec, N):
        return t_log(spec, N)


class MorseKinetic(KineticHandler):
    name = MORSE

    def build(self, spec, N):
        return t_morse(spec, N)


REGISTRY = {c.name: c for c in find_subclasses(KineticHandler) if c.name}


def build_kinetic(spec, N, method=ANALYTIC, check=False, order=None):
    """ Build the kinetic matrix for a basis.

    Parameters
    ----------
    spec: BasisSpec
    N: int
        Matrix order
    method: str
        ANALYTIC uses the closed form of the case, ORACLE the quadrature.
    check: bool
        Compare the leading block of an analytic build with the oracle and
        log a warning when they disagree.
    order: int
        Starting quadrature order for the oracle

    Returns
    -------
    build: KineticBuild

    """
    if N < 1:
        raise ParameterError("Matrix order must be positive, got {}".format(
            N))
    if method == ORACLE:
        matrix = t_oracle_matrix(spec, N, order)
    elif method == ANALYTIC:
        Handler = REGISTRY.get(spec.case_id)
        if Handler is None:
            raise ConfigError("No kinetic builder for '{}'".format(
                spec.case_id))
        matrix = Handler().build(spec, N)
    else:
        raise ConfigError("Unknown kinetic method '{}'".format(method))
    log.debug("Built {}x{} {} kinetic matrix for {}".format(N, N, method,
                                                            spec))
    result = KineticBuild(spec=spec, N=int(N), matrix=matrix, method=method)

    if check and method == ANALYTIC:
        size = min(N, CHECK_SIZE)
        ref = t_oracle_matrix(spec, size, order).to_array()
        got = matrix.to_array()[:size, :size]
        scale = np.max(np.abs(ref))
        dev = np.abs(got - ref) / np.maximum(np.abs(ref), CHECK_FLOOR * scale)
        result.deviation = float(np.max(dev))
        if result.deviation > CHECK_RTOL:
            log.warning("Analytic kinetic matrix for {} differs from the "
                        "oracle by {:.3g}".format(spec, result.deviation))
    return result
