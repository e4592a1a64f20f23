"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 9, 2026

@author: specpot team
"""
import numpy as np
from atom.api import (
    Atom, Bool, Callable, Enum, Float, Int, List, Str, Tuple, Typed
)
from specpot.core.api import Model, ConfigError, ParameterError
from specpot.polynomial.models import PolyParams
from specpot.basis.models import BasisSpec

#: The kinetic part of the column comes from the truncated matrix
MATRIX = 'MATRIX'

#: The kinetic part of column 0 is summed to all orders in closed form
LOCAL = 'LOCAL'

KINETIC_COLUMNS = (MATRIX, LOCAL)


class PotentialCurve(Model):
    """ A potential V(x) sampled on a grid """

    #: Grid points, strictly increasing
    xs = Typed(np.ndarray, factory=lambda: np.zeros(0)).tag(config=True)

    #: Potential values in energy units
    vs = Typed(np.ndarray, factory=lambda: np.zeros(0)).tag(config=True)

    case_id = Str().tag(config=True)
    params = Typed(PolyParams).tag(config=True)
    spec = Typed(BasisSpec).tag(config=True)

    #: Truncation order of the potential matrix
    N = Int().tag(config=True)

    #: Column of the potential matrix the curve was built from
    column = Int().tag(config=True)

    #: How the kinetic part of the column was summed
    kinetic = Enum(*KINETIC_COLUMNS).tag(config=True)

    #: Whether l(l+1)/2x^2 has been added
    includes_orbital = Bool().tag(config=True)

    #: Points dropped because they were too close to a node of phi_column
    masked = Int().tag(config=True)

    #: Deviation from the column 0 curve, -1 when not computed
    consistency = Float(-1.0).tag(config=True)

    #: Deviation from the curve at twice the order on the interior of the
    #: grid, -1 when not computed
    convergence = Float(-1.0).tag(config=True)

    #: The same on the trimmed edge points, where the sum converges slowest
    edge_convergence = Float(-1.0).tag(config=True)

    @property
    def size(self):
        return len(self.xs)

    def to_csv(self):
        lines = ["# x,V"]
        for x, v in zip(self.xs, self.vs):
            lines.append("%.17g,%.17g" % (x, v))
        return "\n".join(lines) + "\n"


class BoundState(Model):
    """ Expansion of a bound state in the basis,
    psi_k(x) = sum_n c_n phi_n(x) with c_n = sqrt(omega_k) P_n(z_k^2).

    """
    k = Int().tag(config=True)
    energy = Float().tag(config=True)
    amplitudes = Typed(np.ndarray, factory=lambda: np.zeros(0)).tag(
        config=True)

    #: |c_{N-1}|, small when the truncation has converged
    tail = Float().tag(config=True)

    #: sum c_n^2, the norm of the truncated expansion
    norm = Float().tag(config=True)

    @property
    def order(self):
        """ Number of basis elements in the expansion """
        return len(self.amplitudes)

    @property
    def error_floor(self):
        """ Rough size of the truncation error of psi, |c_{N-1}| N """
        return self.tail * self.order

    @staticmethod
    def nodes(xs, psi, rtol=1e-8, floor=0.0):
        """ Count interior sign changes of psi ignoring values below
        floor or rtol * max|psi|.

        """
        psi = np.asarray(psi, dtype=float)
        limit = max(floor, rtol * np.max(np.abs(psi)))
        signs = np.sign(psi[np.abs(psi) > limit])
        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def count_nodes(self, xs, psi):
        """ Sign changes of psi where it rises above the truncation error """
        return self.nodes(xs, psi, floor=10 * self.error_floor)


class FitReport(Model):
    """ Result of a linear least squares fit of a curve """
    model_id = Str().tag(config=True)

    #: Names of the regressors, in the order of `coefficients`
    names = List(str).tag(config=True)
    coefficients = Typed(np.ndarray, factory=lambda: np.zeros(0)).tag(
        config=True)

    #: Root mean square of the residual in energy units
    rms_residual = Float().tag(config=True)
    max_residual = Float().tag(config=True)

    #: rms_residual over the dynamic range of the fitted values
    relative_rms = Float().tag(config=True)

    #: Range of x used by the fit
    grid_range = Tuple(float).tag(config=True)

    #: Number of points used by the fit
    points = Int().tag(config=True)

    def coefficient(self, name):
        try:
            return float(self.coefficients[self.names.index(name)])
        except ValueError:
            raise ParameterError("Model {} has no coefficient '{}'".format(
                self.model_id, name))

    def to_csv(self):
        lines = ["# model={}".format(self.model_id), "# name,value"]
        for name, c in zip(self.names, self.coefficients):
            lines.append("%s,%.17g" % (name, c))
        lines.append("rms_residual,%.17g" % self.rms_residual)
        lines.append("max_residual,%.17g" % self.max_residual)
        lines.append("relative_rms,%.17g" % self.relative_rms)
        return "\n".join(lines) + "\n"


# -----------------------------------------------------------------------------
# Conventional potentials with the same kind of spectrum
# -----------------------------------------------------------------------------
class ReferencePotential(Atom):
    """ A conventional potential whose bound spectrum is
    E_k = -lam^2 (k + c)^2 / 2 with c given by `shift`.

    """
    name = Str()

    #: 2 V / lam^2 as a function of (x, lam, A, B)
    expression = Callable()

    #: Coordinate domain
    domain = Tuple(float)

    #: c as a function of (A, B)
    shift = Callable()

    def potential(self, x, lam, A, B=0.0):
        """ V(x) in energy units """
        return 0.5 * lam ** 2 * self.expression(np.asarray(x, dtype=float),
                                                lam, A, B)


REFERENCE_POTENTIALS = {
    'special_eckart': ReferencePotential(
        name='Special Eckart',
        expression=lambda x, lam, A, B: A * (A - 1) / np.sinh(lam * x) ** 2,
        domain=(0.0, np.inf),
        shift=lambda A, B: A),
    'morse': ReferencePotential(
        name='1D Morse',
        expression=lambda x, lam, A, B: (0.25 * np.exp(2 * lam * x) +
                                         A * np.exp(lam * x)),
        domain=(-np.inf, np.inf),
        shift=lambda A, B: A + 0.5),
    'poschl_teller': ReferencePotential(
        name='Poschl-Teller',
        expression=lambda x, lam, A, B: (
            A * (A - 0.5) / np.sinh(lam * x / 2) ** 2 -
            B * (B - 0.5) / np.cosh(lam * x / 2) ** 2),
        domain=(0.0, np.inf),
        shift=lambda A, B: A + B),
    'scarf': ReferencePotential(
        name='1D Scarf',
        expression=lambda x, lam, A, B: (
            (B ** 2 - A * (A - 1) - B * (2 * A - 1) * np.sinh(lam * x)) /
            np.cosh(lam * x) ** 2),
        domain=(-np.inf, np.inf),
        shift=lambda A, B: A),
    'rosen_morse': ReferencePotential(
        name='Rosen-Morse',
        expression=lambda x, lam, A, B: (
            (B ** 2 + A * (A - 1) + B * (2 * A - 1) * np.cosh(lam * x)) /
            np.sinh(lam * x) ** 2),
        domain=(0.0, np.inf),
        shift=lambda A, B: A),
}

#: The full hyperbolic Eckart spectrum has an extra B^2 (k+A)^-2 term and is
#: kept out of the table.


def reference_spectrum(name, lam, A, B=0.0, count=None):
    """ E_k = -lam^2 (k + c)^2 / 2 for the named reference potential.

    Parameters
    ----------
    name: str
        Key of REFERENCE_POTENTIALS
    count: int
        Number of levels, by default floor(-c) + 1

    """
    ref = REFERENCE_POTENTIALS.get(name)
    if ref is None:
        raise ConfigError("Unknown reference potential '{}', choose from "
                          "{}".format(name, sorted(REFERENCE_POTENTIALS)))
    c = ref.shift(A, B)
    if count is None:
        if c >= 0:
            return np.zeros(0)
        count = int(np.floor(-c)) + 1
    k = np.arange(count, dtype=float)
    return -0.5 * lam ** 2 * (k + c) ** 2
