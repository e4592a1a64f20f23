"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 6, 2026

@author: specpot team

The integrals

    F+-_{n,m}(k, tau) = A_n A_m int_0^inf y^{nu +- k} e^{-(1+tau) y}
                        L_n^nu(y) L_m^nu(y) dy

and the tridiagonal matrix J of y in the orthonormal Laguerre basis.

"""
import numpy as np
from atom.api import Enum, Float, Int
from scipy.special import gammaln
from specpot.core.api import (
    Model, SymMatrix, log, ParameterError, ConvergenceError
)
from specpot.core.specfun import (
    laguerre_table, poch_over_factorial, hyp_terminating
)
from .laguerre import gauss_laguerre, default_quad_order, MAX_QUAD_ORDER

PLUS = '+'
MINUS = '-'

#: Two successive oracle orders must agree to this
ORACLE_TOL = 1e-12


class IntegralKey(Model):
    """ Identifies one member of the F+- family """
    sign = Enum(PLUS, MINUS).tag(config=True)
    k = Int(0).tag(config=True)
    tau = Float(0.0).tag(config=True)
    nu = Float(1.0).tag(config=True)

    def validate(self):
        if self.k < 0:
            raise ParameterError("k must be non-negative, got {}".format(
                self.k))
        if self.tau < 0:
            raise ParameterError("tau must be non-negative, got {}".format(
                self.tau))
        if self.sign == PLUS and self.tau != 0:
            raise ParameterError("F+ is only available for tau = 0")
        if self.sign == MINUS and not self.nu > self.k - 1:
            raise ParameterError(
                "F-(k={}) requires nu > k - 1, got nu={}".format(
                    self.k, self.nu))

    @property
    def exponent(self):
        """ Power of y in the integrand """
        return self.nu + self.k if self.sign == PLUS else self.nu - self.k

    def evaluate(self, n, m, N=None):
        self.validate()
        if self.sign == PLUS:
            if N is None:
                N = max(n, m) + self.k + 1
            return f_plus(self.nu, self.k, n, m, N)
        return f_minus(self.nu, self.k, self.tau, n, m)

    def __repr__(self):
        return "F{}(k={}, tau={}; nu={})".format(self.sign, self.k, self.tau,
                                                 self.nu)


def _log_norms(nu, N):
    n = np.arange(N, dtype=float)
    return 0.5 * (gammaln(n + 1) - gammaln(n + nu + 1))


def j_matrix(nu, N):
    """ The N x N matrix of y in the orthonormal Laguerre basis with
    diagonal 2n + nu + 1 and off-diagonal -sqrt((n+1)(n+nu+1)).

    """
    if not nu > -1:
        raise ParameterError("nu must exceed -1, got {}".format(nu))
    if N < 1:
        raise ParameterError("J needs a positive size, got {}".format(N))
    n = np.arange(N, dtype=float)
    return SymMatrix.tridiagonal(2 * n + nu + 1,
                                 -np.sqrt((n[:-1] + 1) * (n[:-1] + nu + 1)))


def f_plus_matrix(nu, k, N):
    """ J^k built from J of size N + k and cut to the exact N x N block """
    J = j_matrix(nu, N + k).to_array()
    Jk = np.linalg.matrix_power(J, int(k))[:N, :N]
    return SymMatrix.from_array(0.5 * (Jk + Jk.T), bandwidth=int(k))


def f_plus(nu, k, n, m, N):
    """ F+_{n,m}(k, 0) = (J^k)_{n,m} from J truncated at size N.

    Raises
    ------
    ParameterError
        If n or m is within k of the truncation edge where the truncated
        power is no longer exact.

    """
    if k < 0:
        raise ParameterError("k must be non-negative")
    if max(n, m) > N - 1 - k:
        raise ParameterError(
            "F+ entry ({}, {}) with k={} needs N >= {}, got N={}".format(
                n, m, k, max(n, m) + k + 1, N))
    J = j_matrix(nu, N).to_array()
    return float(np.linalg.matrix_power(J, int(k))[n, m])


def _check_minus(nu, k, tau):
    if k < 0:
        raise ParameterError("k must be non-negative, got {}".format(k))
    if tau < 0:
        raise ParameterError("tau must be non-negative, got {}".format(tau))
    if not nu > k - 1:
        raise ParameterError(
            "F-(k={}) requires nu > k - 1, got nu={}".format(k, nu))


def f_minus_matrix(nu, k, tau, N):
    """ The N x N matrix of F-_{n,m}(k, tau).

    L_n^nu(y) is rescaled to L_i^nu((1+tau) y) and then expanded in
    L_j^{nu-k}, both with non-negative coefficients, so the result is a
    sum of positive terms

        F = (1+tau)^{-(nu-k+1)} R R^T
        R_{n,j} = A_n sqrt(Gamma(j+nu-k+1) / j!) sum_i M_{n,i} C_{i,j}

    At tau = 0 this is the Gauss summed closed form and at k = 0, tau = 0
    it is the identity.

    """
    _check_minus(nu, k, tau)
    s = 1.0 + tau
    n = np.arange(N, dtype=float)
    i, j = np.meshgrid(n, n, indexing='ij')
    lower = i >= j

    #: Scaling theorem L_n(t/s) = sum_i binom(n+nu, n-i) s^-i (1-1/s)^(n-i)
    if tau == 0:
        M = np.eye(N)
    else:
        with np.errstate(divide='ignore', invalid='ignore'):
            logM = (gammaln(i + nu + 1) - gammaln(i - j + 1) -
                    gammaln(j + nu + 1) - j * np.log(s) +
                    (i - j) * np.log1p(-1 / s))
        M = np.where(lower, np.exp(np.where(lower, logM, 0.0)), 0.0)

    #: Connection L_i^nu = sum_j (k)_{i-j} / (i-j)! L_j^{nu-k}
    if k == 0:
        C = np.eye(N)
    else:
        with np.errstate(divide='ignore', invalid='ignore'):
            logC = (gammaln(k + i - j) - gammaln(k) - gammaln(i - j + 1))
        C = np.where(lower, np.exp(np.where(lower, logC, 0.0)), 0.0)

    logG = 0.5 * (gammaln(n + nu - k + 1) - gammaln(n + 1))
    R = np.exp(_log_norms(nu, N))[:, None] * (M @ C) * np.exp(logG)[None, :]
    F = s ** (-(nu - k + 1)) * (R @ R.T)
    return 0.5 * (F + F.T)


def _closed_tau0(nu, k, n, m):
    """ F-(k, 0) by the Gauss summed form """
    if k == 0:
        return 1.0 if n == m else 0.0
    total = 0.0
    for j in range(min(n, m) + 1):
        total += (poch_over_factorial(nu - k + 1, j) *
                  poch_over_factorial(k, n - j) *
                  poch_over_factorial(k, m - j))
    lognorm = _log_norms(nu, max(n, m) + 1)
    return float(np.exp(lognorm[n] + lognorm[m] + gammaln(nu - k + 1)) *
                 total)


def _closed_k0(nu, tau, n, m):
    """ F-(0, tau) for tau > 0 """
    total = 0.0
    for j in range(min(n, m) + 1):
        total += (poch_over_factorial(nu + 1, j) *
                  poch_over_factorial(j + nu + 1, n - j) *
                  poch_over_factorial(j + nu + 1, m - j) * tau ** (-2 * j))
    lognorm = _log_norms(nu, max(n, m) + 1)
    return float(np.exp(lognorm[n] + lognorm[m] + gammaln(nu + 1) +
                        (n + m) * np.log(tau) -
                        (n + m + nu + 1) * np.log1p(tau)) * total)


def _closed_general(nu, k, tau, n, m):
    """ The double hypergeometric sum for general k and tau """
    s = 1.0 + tau
    c = nu - k + 1
    total = 0.0
    for j in range(min(n, m) + 1):
        fn = hyp_terminating([-n + j, c + j], [nu + j + 1], 1 / s)
        fm = hyp_terminating([-m + j, c + j], [nu + j + 1], 1 / s)
        total += (poch_over_factorial(c, j) *
                  poch_over_factorial(j + nu + 1, n - j) *
                  poch_over_factorial(j + nu + 1, m - j) *
                  s ** (-2 * j) * fn * fm)
    lognorm = _log_norms(nu, max(n, m) + 1)
    return float(np.exp(lognorm[n] + lognorm[m] + gammaln(c) -
                        c * np.log(s)) * total)


def f_minus(nu, k, tau, n, m, method='auto'):
    """ F-_{n,m}(k, tau).

    Parameters
    ----------
    nu: float
        Laguerre index, nu > k - 1
    k: int
        Power reduction
    tau: float
        Extra exponential decay, tau >= 0
    n, m: int
        Indices
    method: str
        'auto' reads the entry from the positive series of `f_minus_matrix`
        on every branch. 'direct' sums the closed hypergeometric forms term
        by term, the tau = 0 form when tau = 0, the k = 0 form when k = 0
        and the double sum otherwise. The direct sums alternate in sign
        and lose accuracy for large n.

    Raises
    ------
    ParameterError
        If nu <= k - 1 or k, tau are negative.

    """
    _check_minus(nu, k, tau)
    if method == 'auto':
        return float(f_minus_matrix(nu, k, tau, max(n, m) + 1)[n, m])
    elif method != 'direct':
        raise ParameterError("Unknown method '{}'".format(method))
    if tau == 0:
        return _closed_tau0(nu, k, n, m)
    if k == 0:
        return _closed_k0(nu, tau, n, m)
    return _closed_general(nu, k, tau, n, m)


def f_minus_general(nu, k, tau, n, m):
    """ The double hypergeometric sum evaluated for any k and tau, without
    switching to the special forms.

    """
    _check_minus(nu, k, tau)
    return _closed_general(nu, k, tau, n, m)


def quad_oracle(nu, sign, k, tau, n, m, order=None):
    """ F+-_{n,m}(k, tau) by Gauss-Laguerre quadrature with weight
    t^{nu +- k} e^{-t}, t = (1 + tau) y. The order grows until two
    successive estimates agree to ORACLE_TOL.

    Raises
    ------
    ConvergenceError
        If the estimates do not settle before MAX_QUAD_ORDER.

    """
    key = IntegralKey(sign=sign, k=int(k), tau=float(tau), nu=float(nu))
    if sign == MINUS:
        key.validate()
    e = key.exponent
    if not e > -1:
        raise ParameterError("Integrand y^{} is not integrable".format(e))
    s = 1.0 + tau
    N = max(n, m) + 1
    lognorm = _log_norms(nu, N)
    scale = np.exp(lognorm[n] + lognorm[m] - (e + 1) * np.log(s))

    def estimate(order):
        t, w = gauss_laguerre(order, e)
        L = laguerre_table(N - 1, nu, t / s)
        return scale * float(np.sum(w * L[n] * L[m]))

    order = order or default_quad_order()
    order = min(max(int(order), (n + m) // 2 + 1), MAX_QUAD_ORDER - 16)
    last = estimate(order)
    while order < MAX_QUAD_ORDER:
        order = min(order + 16, MAX_QUAD_ORDER)
        value = estimate(order)
        if abs(value - last) <= ORACLE_TOL * max(1.0, abs(value)):
            log.debug("{} oracle ({}, {}) settled at order {}".format(
                key, n, m, order))
            return value
        last = value
    raise ConvergenceError("{} oracle ({}, {}) did not settle by order "
                           "{}".format(key, n, m, MAX_QUAD_ORDER))
