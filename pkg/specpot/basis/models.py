"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 5, 2026

@author: specpot team
"""
import math
from atom.api import Enum, Float, Int
from specpot.core.api import Model, ParameterError

COULOMB_LINEAR = 'COULOMB_LINEAR'
OSCILLATOR = 'OSCILLATOR'
LOG = 'LOG'
MORSE = 'MORSE'

CASES = (COULOMB_LINEAR, OSCILLATOR, LOG, MORSE)

#: Cases on the radial half line with an orbital term
RADIAL_CASES = (COULOMB_LINEAR, OSCILLATOR)


class BasisSpec(Model):
    """ One Laguerre basis phi_n(x) = A_n y^alpha e^{-beta y} L_n^nu(y)
    with a case specific coordinate map y(x).

    =============== =============== ========= ============ ==========
    case            y(x)            2 alpha   2 beta       norm
    =============== =============== ========= ============ ==========
    COULOMB_LINEAR  lam x           nu        1            A_n
    OSCILLATOR      (lam x)^2       nu + 1/2  1            sqrt(2) A_n
    LOG             g ln(1 + lam x) nu        1 + 1/g      sqrt(g) A_n
    MORSE           exp(lam x)      nu + 1    1            A_n
    =============== =============== ========= ============ ==========

    The extra sqrt(lam) in `norm` makes the set orthonormal in x.

    """
    case_id = Enum(*CASES).tag(config=True)

    #: Inverse length
    lam = Float(1.0).tag(config=True)

    #: Laguerre index, nu > -1
    nu = Float(1.0).tag(config=True)

    #: Log scale, used by the LOG case only
    gamma = Float(2.0).tag(config=True)

    #: Angular momentum, used by the radial cases only
    ell = Int(0).tag(config=True)

    @classmethod
    def for_case(cls, case_id, lam=1.0, ell=0, gamma=2.0, nu=None, mu=None):
        """ Create a validated basis applying the index linkage rules:
        nu = 2(ell + 1) for COULOMB_LINEAR, nu = ell + 1/2 for OSCILLATOR
        and nu = 1 - 2 mu by default for LOG and MORSE.

        """
        if case_id not in CASES:
            raise ParameterError("Unknown basis case '{}'".format(case_id))
        if nu is None:
            if case_id == COULOMB_LINEAR:
                nu = 2 * (ell + 1)
            elif case_id == OSCILLATOR:
                nu = ell + 0.5
            elif mu is not None:
                nu = 1 - 2 * mu
            else:
                raise ParameterError(
                    "Case {} needs nu or mu to set nu".format(case_id))
        spec = cls(case_id=case_id, lam=float(lam), ell=int(ell),
                   gamma=float(gamma), nu=float(nu))
        spec.validate()
        return spec

    @property
    def alpha(self):
        return 0.5 * {
            COULOMB_LINEAR: self.nu,
            OSCILLATOR: self.nu + 0.5,
            LOG: self.nu,
            MORSE: self.nu + 1,
        }[self.case_id]

    @property
    def beta(self):
        if self.case_id == LOG:
            return 0.5 * (1 + 1 / self.gamma)
        return 0.5

    @property
    def norm(self):
        """ Extra normalization factor c so phi_n carries sqrt(c lam) A_n """
        return {
            COULOMB_LINEAR: 1.0,
            OSCILLATOR: 2.0,
            LOG: self.gamma,
            MORSE: 1.0,
        }[self.case_id]

    @property
    def jacobian_form(self):
        """ (C, q, r) such that dy/dx = C y^q e^{r y} """
        lam = self.lam
        return {
            COULOMB_LINEAR: (lam, 0.0, 0.0),
            OSCILLATOR: (2 * lam, 0.5, 0.0),
            LOG: (self.gamma * lam, 0.0, -1 / self.gamma),
            MORSE: (lam, 1.0, 0.0),
        }[self.case_id]

    @property
    def domain(self):
        if self.case_id == MORSE:
            return (-math.inf, math.inf)
        return (0.0, math.inf)

    @property
    def is_radial(self):
        return self.case_id in RADIAL_CASES

    def validate(self):
        """ Check the parameter ranges, the index linkage and that the
        exponents reproduce the Laguerre weight y^nu e^{-y} under the
        measure dx = dy / y'.

        """
        if not self.lam > 0:
            raise ParameterError("lam must be positive, got {}".format(
                self.lam))
        if not self.nu > -1:
            raise ParameterError("nu must exceed -1, got {}".format(self.nu))
        if self.case_id == LOG and not self.gamma > 0:
            raise ParameterError("gamma must be positive, got {}".format(
                self.gamma))
        if self.ell < 0:
            raise ParameterError("ell must be non-negative")
        if self.case_id == COULOMB_LINEAR and self.nu != 2 * (self.ell + 1):
            raise ParameterError(
                "COULOMB_LINEAR requires nu = 2(ell + 1) = {}, got {}".format(
                    2 * (self.ell + 1), self.nu))
        if self.case_id == OSCILLATOR and self.nu != self.ell + 0.5:
            raise ParameterError(
                "OSCILLATOR requires nu = ell + 1/2 = {}, got {}".format(
                    self.ell + 0.5, self.nu))

        _, q, r = self.jacobian_form
        if (abs(2 * self.alpha - q - self.nu) > 1e-12 or
                abs(2 * self.beta + r - 1) > 1e-12):
            raise ParameterError(
                "Exponents (2a, 2b) = ({}, {}) do not give the Laguerre "
                "weight for {}".format(2 * self.alpha, 2 * self.beta,
                                       self.case_id))

    def __repr__(self):
        return "BasisSpec({}, lam={}, nu={}, gamma={}, ell={})".format(
            self.case_id, self.lam, self.nu, self.gamma, self.ell)
