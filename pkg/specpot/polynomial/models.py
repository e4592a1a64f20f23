"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 3, 2026

@author: specpot team
"""
import math
import numpy as np
from atom.api import Float, Typed
from specpot.core.api import Model, ParameterError

MIXED = 'MIXED'
CONTINUOUS = 'CONTINUOUS'


class PolyParams(Model):
    """ Parameters (mu, a, b) of the continuous dual Hahn polynomial and
    the inverse length scale lam.

    """
    mu = Float(-4.2).tag(config=True)
    a = Float(5.2).tag(config=True)
    b = Float(5.2).tag(config=True)

    #: Inverse length, lam > 0
    lam = Float(1.0).tag(config=True)

    @classmethod
    def create(cls, mu, lam=1.0, a=None, b=None):
        """ Create and validate parameters. a and b default to 1 - mu. """
        p = cls(mu=float(mu), lam=float(lam),
                a=float(1 - mu if a is None else a),
                b=float(1 - mu if b is None else b))
        p.validate()
        return p

    @property
    def regime(self):
        mu, a, b = self.mu, self.a, self.b
        if mu < 0 and a + mu > 0 and b + mu > 0:
            return MIXED
        if mu > 0 and a > 0 and b > 0:
            return CONTINUOUS
        return None

    @property
    def bound_count(self):
        """ Number of discrete points, floor(-mu) + 1 in the mixed regime """
        if self.regime != MIXED:
            return 0
        return int(math.floor(-self.mu)) + 1

    def validate(self):
        """ Check the parameters are in a supported regime.

        Raises
        ------
        ParameterError
            If lam <= 0, the regime is neither mixed nor continuous, or
            -mu is an integer.

        """
        if not self.lam > 0:
            raise ParameterError("lam must be positive, got {}".format(
                self.lam))
        if self.regime is None:
            raise ParameterError(
                "Parameters mu={}, a={}, b={} are in neither the mixed "
                "(mu < 0, a + mu > 0, b + mu > 0) nor the continuous "
                "(mu, a, b > 0) regime".format(self.mu, self.a, self.b))
        if float(-self.mu).is_integer():
            raise ParameterError(
                "-mu must not be an integer, got mu={}".format(self.mu))

    def __repr__(self):
        return "PolyParams(mu={}, a={}, b={}, lam={})".format(
            self.mu, self.a, self.b, self.lam)


class SpectrumLadder(Model):
    """ The finite ladder of bound state energies """

    #: Energies in atomic units, strictly increasing and negative
    energies = Typed(np.ndarray, factory=lambda: np.zeros(0)).tag(config=True)

    #: Parameters that produced the ladder
    params = Typed(PolyParams).tag(config=True)

    @property
    def count(self):
        return len(self.energies)

    def to_csv(self):
        lines = ["# k,E"]
        for k, e in enumerate(self.energies):
            lines.append("%d,%.17g" % (k, e))
        return "\n".join(lines) + "\n"
