"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 10, 2026

@author: specpot team

Linear least squares fits of reconstructed curves to analytic forms.

"""
import numpy as np
from atom.api import Atom
from scipy.linalg import solve_triangular
from specpot.core.api import (
    log, find_subclasses, ConfigError, ParameterError, DomainError,
    NumericError
)
from specpot.basis.models import LOG
from specpot.basis.kinetic import local_kinetic
from .models import FitReport
from .reconstruct import orbital_term, interior, DEFAULT_TRIM

#: Relative rms above which a fit is reported as poor
FIT_THRESHOLD = 1e-2

#: Smallest |R_ii| relative to the largest before the design is rank deficient
RANK_TOL = 1e-12


class FitModel(Atom):
    """ A potential that is linear in its free coefficients """

    #: Model id
    name = ''

    #: Coefficient names, one per regressor
    names = ()

    #: Whether the form is meant for the potential without the orbital
    #: term of a radial case, which is then removed before fitting
    orbital = False

    def check_domain(self, xs, spec):
        """ Raise a ParameterError or DomainError if the model does not
        apply to the basis or a regressor is undefined on xs.

        """

    def regressors(self, xs, spec):
        """ Build the design matrix.

        Parameters
        ----------
        xs: array
            Grid points
        spec: BasisSpec
            Basis of the curve, may be None for curves given as data

        Returns
        -------
        design: array
            Shape (len(xs), len(names))

        """
        raise NotImplementedError()


def _lam(spec):
    return spec.lam if spec is not None else 1.0


class CoulombPlusLinear(FitModel):
    """ c_inv / x + c_lin x + c_0 """
    name = 'COULOMB_PLUS_LINEAR'
    names = ('c_inv', 'c_lin', 'c_0')
    orbital = True

    def check_domain(self, xs, spec):
        if np.any(xs <= 0):
            raise DomainError("1/x needs x > 0")

    def regressors(self, xs, spec):
        return np.column_stack([1 / xs, xs, np.ones_like(xs)])


class Harmonic(FitModel):
    """ c_2 x^2 + c_0 """
    name = 'HARMONIC'
    names = ('c_2', 'c_0')
    orbital = True

    def regressors(self, xs, spec):
        return np.column_stack([xs ** 2, np.ones_like(xs)])


class Logarithmic(FitModel):
    """ c_log ln(1 + lam x) + c_0 + c_kin K(x) on the LOG basis.

    K is `local_kinetic` of the basis. Column 0 of H is linear in
    y = g ln(1 + lam x), so the reconstructed curve tends to the
    logarithm plus -K, whose g^2 lam^2 nu(nu - 2) / 8y^2 part dominates
    near the origin.

    """
    name = 'LOGARITHMIC'
    names = ('c_log', 'c_0', 'c_kin')

    def check_domain(self, xs, spec):
        if spec is None or spec.case_id != LOG:
            raise ParameterError("Model {} needs a curve on the LOG "
                                 "basis".format(self.name))
        if np.any(xs <= 0):
            raise DomainError("The kinetic term needs x > 0")

    def regressors(self, xs, spec):
        return np.column_stack([np.log1p(spec.lam * xs), np.ones_like(xs),
                                local_kinetic(spec, xs)])


class MorseExact(FitModel):
    """ c_2 e^{2 lam x} + c_1 e^{lam x}. The Morse potential has
    c_2 = lam^2 / 8 and c_1 = A lam^2 / 2.

    """
    name = 'MORSE_EXACT'
    names = ('c_2', 'c_1')

    def regressors(self, xs, spec):
        e = np.exp(_lam(spec) * xs)
        return np.column_stack([e ** 2, e])


class Constant(FitModel):
    name = 'CONSTANT'
    names = ('c_0',)

    def regressors(self, xs, spec):
        return np.ones((len(xs), 1))


REGISTRY = {c.name: c for c in find_subclasses(FitModel) if c.name}


def get_model(model):
    """ Look up a model by id, instances are returned as is """
    if isinstance(model, FitModel):
        return model
    Model = REGISTRY.get(model)
    if Model is None:
        raise ConfigError("Unknown fit model '{}', choose from {}".format(
            model, sorted(REGISTRY)))
    return Model()


def solve_least_squares(A, b):
    """ Solve min |A c - b| by a QR factorization of the column scaled
    design.

    Raises
    ------
    NumericError
        If the design does not have full column rank.

    """
    scale = np.linalg.norm(A, axis=0)
    if np.any(scale == 0):
        raise NumericError("Design matrix has a zero column")
    Q, R = np.linalg.qr(A / scale)
    d = np.abs(np.diag(R))
    if np.min(d) <= RANK_TOL * np.max(d):
        raise NumericError("Design matrix is rank deficient, |R| ranges "
                           "{:.3g}..{:.3g}".format(np.min(d), np.max(d)))
    return solve_triangular(R, Q.T @ b) / scale


def fit_curve(curve, model, trim=DEFAULT_TRIM):
    """ Fit a curve to a linear model by ordinary least squares.

    Parameters
    ----------
    curve: PotentialCurve
    model: FitModel or str
    trim: float
        Fraction of points dropped at each end

    Returns
    -------
    report: FitReport

    Raises
    ------
    ParameterError
        If the orbital flags do not match or there are too few points.
    NumericError
        If the design is rank deficient.

    """
    model = get_model(model)
    xs, target = curve.xs, curve.vs.copy()
    if curve.includes_orbital:
        if not model.orbital:
            raise ParameterError(
                "Model {} does not account for the orbital term the curve "
                "includes".format(model.name))
        target -= orbital_term(xs, curve.spec.ell)

    inner = interior(len(xs), trim)
    xs, target = xs[inner], target[inner]
    if len(xs) < 3 * len(model.names):
        raise ParameterError(
            "Model {} needs at least {} points, got {}".format(
                model.name, 3 * len(model.names), len(xs)))

    model.check_domain(xs, curve.spec)
    A = model.regressors(xs, curve.spec)
    coef = solve_least_squares(A, target)
    resid = target - A @ coef
    rms = float(np.sqrt(np.mean(resid ** 2)))
    span = float(np.ptp(target))
    report = FitReport(
        model_id=model.name, names=list(model.names), coefficients=coef,
        rms_residual=rms, max_residual=float(np.max(np.abs(resid))),
        relative_rms=rms / span if span > 0 else rms,
        grid_range=(float(xs[0]), float(xs[-1])), points=len(xs))
    log.info("Fit {} to {}: {} rms={:.3g} relative={:.3g}".format(
        model.name, curve.case_id,
        ", ".join("{}={:.10g}".format(n, c) for n, c in zip(model.names,
                                                              coef)),
        rms, report.relative_rms))
    if report.relative_rms > FIT_THRESHOLD:
        log.warning("Fit {} to {} has relative rms {:.3g} above {}".format(
            model.name, curve.case_id, report.relative_rms, FIT_THRESHOLD))
    return report


def compare_models(curve, models=None, trim=DEFAULT_TRIM):
    """ Fit the curve to several models, skipping those whose orbital
    handling or domain does not fit the curve.

    Returns
    -------
    reports: dict
        Model id to FitReport

    """
    reports = {}
    for name in (models or sorted(REGISTRY)):
        try:
            reports[name] = fit_curve(curve, name, trim)
        except (ParameterError, DomainError) as e:
            log.debug("Skipped model {}: {}".format(name, e))
    return reports
