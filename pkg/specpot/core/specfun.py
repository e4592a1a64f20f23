"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 2, 2026

@author: specpot team

Scalar special functions: signed log-Gamma, Pochhammer symbols, terminating
hypergeometric sums and Laguerre polynomials.

"""
import math
import numpy as np
from atom.api import Float, Int
from scipy.special import gammaln, gammasgn
from .models import Model
from .utils import PoleError, ParameterError


def _is_nonpositive_integer(x):
    return x <= 0 and float(x).is_integer()


class SignedLog(Model):
    """ A real number stored as a sign and the log of its magnitude. """

    #: One of -1, 0, +1
    sign = Int(1).tag(config=True)

    #: Natural log of the magnitude, -inf when the sign is zero
    logmag = Float(0.0).tag(config=True)

    @classmethod
    def from_value(cls, x):
        x = float(x)
        if x == 0:
            return cls(sign=0, logmag=-math.inf)
        return cls(sign=1 if x > 0 else -1, logmag=math.log(abs(x)))

    @classmethod
    def zero(cls):
        return cls(sign=0, logmag=-math.inf)

    def value(self):
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.logmag)

    def __mul__(self, other):
        sign = self.sign * other.sign
        if sign == 0:
            return SignedLog.zero()
        return SignedLog(sign=sign, logmag=self.logmag + other.logmag)

    def __truediv__(self, other):
        if other.sign == 0:
            raise ZeroDivisionError("SignedLog division by zero")
        sign = self.sign * other.sign
        if sign == 0:
            return SignedLog.zero()
        return SignedLog(sign=sign, logmag=self.logmag - other.logmag)

    def sqrt(self):
        """ Square root of a non-negative value """
        if self.sign < 0:
            raise ParameterError("Square root of a negative value")
        if self.sign == 0:
            return SignedLog.zero()
        return SignedLog(sign=1, logmag=0.5 * self.logmag)

    def __repr__(self):
        return "SignedLog(sign={}, logmag={})".format(self.sign, self.logmag)


def log_gamma(x):
    """ Sign and log magnitude of Gamma(x).

    Raises
    ------
    PoleError
        When x is zero or a negative integer.

    """
    x = float(x)
    if _is_nonpositive_integer(x):
        raise PoleError("Gamma has a pole at x={}".format(x))
    return SignedLog(sign=int(gammasgn(x)), logmag=float(gammaln(x)))


def pochhammer(a, n):
    """ Rising factorial (a)_n = a(a+1)...(a+n-1) as a SignedLog with exact
    sign tracking for negative a.

    """
    a = float(a)
    n = int(n)
    if n < 0:
        raise ParameterError("Pochhammer order must be non-negative")
    if n == 0:
        return SignedLog(sign=1, logmag=0.0)
    if _is_nonpositive_integer(a):
        if -a < n:
            #: One of the factors is zero
            return SignedLog.zero()
        #: (a)_n = (-1)^n (1-a-n)_n with 1-a-n >= 1
        r = pochhammer(1 - a - n, n)
        return SignedLog(sign=r.sign * (-1) ** n, logmag=r.logmag)
    return log_gamma(a + n) / log_gamma(a)


def log_poch(a, n):
    """ Vectorized log of (a)_n for a > 0 """
    a = np.asarray(a, dtype=float)
    return gammaln(a + n) - gammaln(a)


def poch_over_factorial(a, n):
    """ (a)_n / n! accumulated as prod_{m=1}^{n} (1 + (a-1)/m). """
    r = 1.0
    for m in range(1, int(n) + 1):
        r *= 1.0 + (a - 1.0) / m
    return r


def hyp_terminating(num, den, x):
    """ Evaluate a generalized hypergeometric series that terminates because
    one numerator parameter is a non-positive integer -n.

    The sum is accumulated with term ratios so no Pochhammer symbol is
    formed separately. A complex conjugate pair in `num` is allowed, the
    real part of the sum is then returned.

    Parameters
    ----------
    num: list
        Numerator parameters. At least one must equal -n for an integer n.
    den: list
        Denominator parameters.
    x: float or array
        The argument.

    Returns
    -------
    result: float or array
        The exact finite sum.

    Raises
    ------
    ParameterError
        If no numerator parameter terminates the series.
    PoleError
        If a denominator Pochhammer vanishes within the sum.

    """
    orders = [int(-p) for p in num
              if np.isscalar(p) and np.isreal(p) and
              _is_nonpositive_integer(float(np.real(p)))]
    if not orders:
        raise ParameterError(
            "Series does not terminate, no numerator is a non-positive "
            "integer: {}".format(num))
    n = min(orders)
    x = np.asarray(x)
    term = np.ones(np.broadcast(x, *num, *den).shape, dtype=complex)
    total = term.copy()
    for j in range(n):
        ratio = x / (j + 1.0)
        for p in num:
            ratio = ratio * (np.asarray(p) + j)
        for q in den:
            d = np.asarray(q) + j
            if np.any(d == 0):
                raise PoleError("Denominator parameter {} hits zero at "
                                "term {}".format(q, j))
            ratio = ratio / d
        term = term * ratio
        total = total + term
    result = np.real(total)
    if result.ndim == 0:
        return float(result)
    return result


def laguerre(n, nu, y):
    """ Evaluate L_n^nu(y) by the upward three-term recursion in degree.

    Parameters
    ----------
    n: int
        Degree
    nu: float
        Index, nu > -1
    y: float or array
        The argument

    """
    return laguerre_table(n, nu, y)[n]


def laguerre_table(n, nu, y):
    """ Return an array with L_0^nu(y) .. L_n^nu(y) along the first axis """
    y = np.asarray(y, dtype=float)
    table = np.empty((int(n) + 1,) + y.shape)
    table[0] = 1.0
    if n >= 1:
        table[1] = 1.0 + nu - y
    for k in range(1, int(n)):
        table[k + 1] = ((2 * k + nu + 1 - y) * table[k] -
                        (k + nu) * table[k - 1]) / (k + 1)
    return table


def laguerre_deriv(n, nu, y):
    """ d/dy L_n^nu(y) = -L_{n-1}^{nu+1}(y) """
    if n == 0:
        return np.zeros_like(np.asarray(y, dtype=float))
    return -laguerre(n - 1, nu + 1, y)
