"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 3, 2026

@author: specpot team

The orthonormal continuous dual Hahn polynomial S_n^mu(z^2; a, b), its
weights and spectrum.

"""
import math
import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import gammaln, loggamma
from specpot.core.api import log, ParameterError, ConvergenceError
from specpot.core.specfun import pochhammer, hyp_terminating
from .models import PolyParams, MIXED

#: Width of one quadrature panel in z
PANEL_WIDTH = 1.0

#: Panels added per tail check
PANELS_PER_BLOCK = 10

#: Give up when the integration range reaches this
Z_LIMIT = 1000.0

#: Tail contribution below which the integral is considered complete
TAIL_TOL = 1e-12


def recursion_coefficients(p, n_max):
    """ Diagonal a_n (n = 0..n_max) and off-diagonal b_n (n = 0..n_max) of
    the symmetric three-term recursion.

    Raises
    ------
    ParameterError
        If any b_n^2 <= 0.

    """
    mu, a, b = p.mu, p.a, p.b
    n = np.arange(n_max + 1, dtype=float)
    diag = (n + mu + a) * (n + mu + b) + n * (n + a + b - 1) - mu ** 2
    radicand = (n + 1) * (n + a + b) * (n + mu + a) * (n + mu + b)
    if np.any(radicand <= 0):
        bad = int(np.argmax(radicand <= 0))
        raise ParameterError(
            "Recursion coefficient b_{}^2 = {} is not positive for {}".format(
                bad, radicand[bad], p))
    return diag, -np.sqrt(radicand)


def eval_recursion(p, n_max, s):
    """ Evaluate P_0(s) .. P_n_max(s) with the three-term recursion

        s P_n = a_n P_n + b_{n-1} P_{n-1} + b_n P_{n+1}

    starting from P_0 = 1 and P_1 = (s - a_0) / b_0.

    Returns
    -------
    values: array
        Shape (n_max + 1,) + shape(s)

    """
    diag, off = recursion_coefficients(p, n_max)
    s = np.asarray(s, dtype=float)
    values = np.empty((n_max + 1,) + s.shape)
    values[0] = 1.0
    if n_max >= 1:
        values[1] = (s - diag[0]) / off[0]
    for n in range(1, n_max):
        values[n + 1] = ((s - diag[n]) * values[n] -
                         off[n - 1] * values[n - 1]) / off[n]
    return values


def _prefactor(p, n):
    """ sqrt((mu+a)_n (mu+b)_n / (n! (a+b)_n)) """
    r = (pochhammer(p.mu + p.a, n) * pochhammer(p.mu + p.b, n) /
         (pochhammer(1, n) * pochhammer(p.a + p.b, n)))
    if r.sign <= 0:
        raise ParameterError(
            "Normalization radicand of S_{} is not positive for {}".format(
                n, p))
    return r.sqrt().value()


def eval_hypergeometric(p, n, z2):
    """ Evaluate S_n^mu(z^2; a, b) from its terminating 3F2 form.

    Parameters
    ----------
    p: PolyParams
    n: int
        Degree
    z2: float
        The value of z^2. For z^2 < 0 (z = i|z|) the pair mu +- iz is passed
        as the real pair mu -+ |z|, otherwise as a complex conjugate pair.

    """
    z2 = float(z2)
    if z2 < 0:
        r = math.sqrt(-z2)
        pair = [p.mu - r, p.mu + r]
    else:
        r = math.sqrt(z2)
        pair = [complex(p.mu, r), complex(p.mu, -r)]
    f = hyp_terminating([-n] + pair, [p.mu + p.a, p.mu + p.b], 1.0)
    return _prefactor(p, n) * f


def weight_continuous(p, z):
    """ Continuous weight rho(z) for z > 0

        rho(z) = |G(mu+iz) G(a+iz) G(b+iz) / G(2iz)|^2
                 / (2 pi G(mu+a) G(mu+b) G(a+b))

    using the complex log-Gamma for the moduli.

    """
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise ParameterError("rho(z) requires z > 0")
    mu, a, b = p.mu, p.a, p.b
    logmod = (loggamma(mu + 1j * z).real + loggamma(a + 1j * z).real +
              loggamma(b + 1j * z).real - loggamma(2j * z).real)
    lognorm = (math.log(2 * math.pi) + gammaln(mu + a) + gammaln(mu + b) +
               gammaln(a + b))
    return np.exp(2 * logmod - lognorm)


def weight_discrete(p, k):
    """ Discrete weight omega(z_k)

        -2 G(a-mu) G(b-mu) / (G(a+b) G(1-2mu) G(mu+a) G(mu+b))
        * (k+mu) (mu+a)_k (mu+b)_k (1-k-2mu)_k
          / ((a-mu-k)_k (b-mu-k)_k k!)

    The G(mu+a) G(mu+b) factor is one when a = b = 1 - mu.

    Raises
    ------
    ParameterError
        If k is out of range or the weight is not positive.

    """
    k = int(k)
    if p.regime != MIXED or not 0 <= k < p.bound_count:
        raise ParameterError(
            "Discrete index k={} outside 0..{} for {}".format(
                k, p.bound_count - 1, p))
    mu, a, b = p.mu, p.a, p.b
    lognorm = (gammaln(a - mu) + gammaln(b - mu) - gammaln(a + b) -
               gammaln(1 - 2 * mu) - gammaln(mu + a) - gammaln(mu + b))
    r = (pochhammer(mu + a, k) * pochhammer(mu + b, k) *
         pochhammer(1 - k - 2 * mu, k) /
         (pochhammer(a - mu - k, k) * pochhammer(b - mu - k, k) *
          pochhammer(1, k)))
    w = -2 * (k + mu) * r.sign * math.exp(lognorm + r.logmag)
    if not w > 0:
        raise ParameterError(
            "Discrete weight omega(z_{}) = {} is not positive, {} is "
            "outside the mixed regime".format(k, w, p))
    return w


def spectrum_points(p):
    """ z_k^2 = -(k + mu)^2 for k = 0..floor(-mu), empty when there are no
    discrete points.

    """
    k = np.arange(p.bound_count, dtype=float)
    return -(k + p.mu) ** 2


def spectrum_energies(p):
    """ Energies E = lam^2 z_k^2 / 2 at the discrete points """
    return 0.5 * p.lam ** 2 * spectrum_points(p)


def discrete_values(p, n_max, k):
    """ P_0 .. P_n_max at the discrete point z_k^2. Each value comes from
    the hypergeometric form which has only k + 1 terms there.

    """
    z2 = -(k + p.mu) ** 2
    return np.array([eval_hypergeometric(p, n, z2)
                     for n in range(n_max + 1)])


def orthogonality_matrix(p, n_max, quad_order=20, discrete=True):
    """ Gram matrix of P_0..P_n_max under the (generalized) orthogonality
    measure. The continuous part uses composite Gauss-Legendre panels on
    z in (0, Z) where Z grows until the tail contribution is negligible.

    Parameters
    ----------
    p: PolyParams
    n_max: int
        Highest degree
    quad_order: int
        Gauss-Legendre nodes per panel
    discrete: bool
        Include the discrete sum. Leaving it out breaks orthogonality in
        the mixed regime.

    Raises
    ------
    ConvergenceError
        If the tail does not settle before Z_LIMIT.

    """
    t, w = leggauss(int(quad_order))
    gram = np.zeros((n_max + 1, n_max + 1))
    z0 = 0.0
    while True:
        edges = z0 + PANEL_WIDTH * np.arange(PANELS_PER_BLOCK + 1)
        lo, hi = edges[:-1, None], edges[1:, None]
        z = (0.5 * (hi - lo) * t + 0.5 * (hi + lo)).ravel()
        wz = (0.5 * (hi - lo) * w).ravel() * weight_continuous(p, z)
        values = eval_recursion(p, n_max, z ** 2)
        block = (values * wz) @ values.T
        gram += block
        z0 = edges[-1]
        if np.max(np.abs(block)) < TAIL_TOL:
            break
        if z0 >= Z_LIMIT:
            raise ConvergenceError(
                "Continuous weight integral did not settle by z={}".format(
                    z0))
    log.debug("Orthogonality integral cut at z={} for {}".format(z0, p))

    if discrete:
        for k in range(p.bound_count):
            v = discrete_values(p, n_max, k)
            gram += weight_discrete(p, k) * np.outer(v, v)
    return gram


def orthogonality_residual(p, n, m, quad_order=20, discrete=True):
    """ |int rho P_n P_m dz + sum_k omega_k P_n(z_k^2) P_m(z_k^2) - delta| """
    gram = orthogonality_matrix(p, max(n, m), quad_order, discrete)
    return abs(gram[n, m] - (1.0 if n == m else 0.0))
