"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 9, 2026

@author: specpot team

Rebuild V(x) from one column of the potential matrix V = H - T.

"""
import math
import numpy as np
from specpot.core.api import (
    log, ParameterError, DomainError, NumericError, ConvergenceError
)
from specpot.polynomial.hamiltonian import build_hamiltonian, DEFAULT_ORDER
from specpot.polynomial.cdh import (
    discrete_values, weight_discrete, spectrum_energies
)
from specpot.basis.models import COULOMB_LINEAR, OSCILLATOR, LOG, MORSE
from specpot.basis.laguerre import (
    coord_map, normalized_laguerre, eval_basis_all
)
from specpot.basis.kinetic import build_kinetic, local_kinetic
from .models import (
    PotentialCurve, BoundState, MATRIX, LOCAL, KINETIC_COLUMNS
)

#: Grid ranges in units of 1/lam
DEFAULT_GRIDS = {
    COULOMB_LINEAR: (0.05, 8.0),
    OSCILLATOR: (0.05, 8.0),
    LOG: (0.01, 5.0),
    MORSE: (-5.0, 2.0),
}

#: Bound state grids, the Morse one reaches past the well at ln(1 - 2 mu)
BOUND_GRIDS = dict(DEFAULT_GRIDS, **{MORSE: (-5.0, 4.0)})

DEFAULT_POINTS = 400

#: Fraction of points at each end of the grid left out of fits and of the
#: interior convergence measure
DEFAULT_TRIM = 0.02

#: Points where |phi_column| is below this fraction of its maximum are masked
NODE_THRESHOLD = 1e-6

#: Bound state expansions grow until |c_{N-1}| is below this
BOUND_TAIL_TOL = 1e-9

MAX_BOUND_ORDER = 3200


def default_grid(spec, points=DEFAULT_POINTS, lo=None, hi=None,
                 grids=DEFAULT_GRIDS):
    """ Evenly spaced grid for the case, lo and hi default to the case range
    divided by lam.

    """
    dlo, dhi = grids[spec.case_id]
    lo = dlo / spec.lam if lo is None else lo
    hi = dhi / spec.lam if hi is None else hi
    if not hi > lo or points < 2:
        raise ParameterError("Invalid grid [{}, {}] with {} points".format(
            lo, hi, points))
    return np.linspace(lo, hi, int(points))


def bound_grid(spec, points=DEFAULT_POINTS):
    """ Grid covering the well and both classical turning points """
    return default_grid(spec, points, grids=BOUND_GRIDS)


def interior(size, trim=DEFAULT_TRIM):
    """ Slice dropping floor(trim * size) points at each end """
    cut = int(np.floor(trim * size))
    return slice(cut, size - cut)


def _check_grid(spec, xs):
    xs = np.asarray(xs, dtype=float)
    if xs.ndim != 1 or xs.size == 0:
        raise ParameterError("Grid must be a non-empty 1D array")
    if np.any(np.diff(xs) <= 0):
        raise ParameterError("Grid must be strictly increasing")
    coord_map(spec, xs)
    return xs


def _check_linkage(p, spec):
    if not math.isclose(p.lam, spec.lam, rel_tol=1e-15):
        raise ParameterError(
            "Polynomial lam={} and basis lam={} differ".format(p.lam,
                                                               spec.lam))
    p.validate()
    spec.validate()


def potential_matrix(p, spec, N=DEFAULT_ORDER):
    """ V = H - T in the basis.

    Parameters
    ----------
    p: PolyParams
    spec: BasisSpec
    N: int
        Truncation order

    Returns
    -------
    V: SymMatrix

    """
    _check_linkage(p, spec)
    H = build_hamiltonian(p, N)
    T = build_kinetic(spec, N).matrix
    return H - T


def _column_values(spec, V, column, xs):
    """ Evaluate sum_m phi_m(x) V_{m,n} / phi_n(x) with the envelope shared
    by every phi_m cancelled. The terms are laid out along a contiguous
    last axis so numpy sums them pairwise.

    """
    N = V.order
    y = np.asarray(coord_map(spec, xs), dtype=float)
    table = normalized_laguerre(spec, N, y)
    terms = np.ascontiguousarray(table.T * V.column(column)[None, :])
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.sum(terms, axis=-1) / table[column]


def _node_mask(spec, N, column, xs):
    """ True where the point is kept """
    if column == 0:
        return np.ones(len(xs), dtype=bool)
    phi = np.abs(eval_basis_all(spec, column + 1, xs)[column])
    return phi >= NODE_THRESHOLD * np.max(phi)


def reconstruct_potential(p, spec, N=DEFAULT_ORDER, column=0, xs=None,
                          on_node='mask', vmatrix=None, kinetic=MATRIX):
    """ Rebuild V(x) from one column of the potential matrix.

    The orbital term is not included, see `add_orbital`.

    Parameters
    ----------
    p: PolyParams
    spec: BasisSpec
    N: int
        Truncation order
    column: int
        Column n of V used, 0 <= n < N
    xs: array
        Strictly increasing grid inside the basis domain, the case default
        when None
    on_node: str
        For column > 0, 'mask' drops points near nodes of phi_n and 'raise'
        raises a NumericError instead.
    vmatrix: SymMatrix
        Use this potential matrix instead of building one
    kinetic: str
        MATRIX sums the kinetic part with the rest of the column. LOCAL
        sums the H part of column 0 and subtracts `local_kinetic`, the
        limit the kinetic part reaches as N grows.

    Returns
    -------
    curve: PotentialCurve

    """
    if not 0 <= column < N:
        raise ParameterError("Column {} is outside 0..{}".format(column,
                                                                 N - 1))
    if on_node not in ('mask', 'raise'):
        raise ParameterError("Unknown node policy '{}'".format(on_node))
    if kinetic not in KINETIC_COLUMNS:
        raise ParameterError("Unknown kinetic column '{}'".format(kinetic))
    if kinetic == LOCAL and (column != 0 or vmatrix is not None):
        raise ParameterError("The closed form kinetic column needs column 0 "
                             "and a Hamiltonian built here")
    xs = default_grid(spec) if xs is None else _check_grid(spec, xs)
    if kinetic == LOCAL:
        _check_linkage(p, spec)
        V = build_hamiltonian(p, N)
    elif vmatrix is None:
        V = potential_matrix(p, spec, N)
    else:
        _check_linkage(p, spec)
        if vmatrix.order != N:
            raise ParameterError("Potential matrix has order {}, expected "
                                 "{}".format(vmatrix.order, N))
        V = vmatrix

    keep = _node_mask(spec, N, column, xs)
    masked = int(np.count_nonzero(~keep))
    if masked and on_node == 'raise':
        bad = xs[~keep][0]
        raise NumericError("x={} is too close to a node of phi_{}".format(
            bad, column))
    xs = xs[keep]
    vs = _column_values(spec, V, column, xs)
    if kinetic == LOCAL:
        vs = vs - local_kinetic(spec, xs)
    if not np.all(np.isfinite(vs)):
        raise NumericError("Reconstructed potential is not finite at "
                           "x={}".format(xs[~np.isfinite(vs)][0]))
    log.info("Reconstructed V(x) for {} from column {} at N={} on {} points "
             "({} masked, {} kinetic)".format(spec.case_id, column, N,
                                              len(xs), masked, kinetic))
    return PotentialCurve(xs=xs, vs=vs, case_id=spec.case_id, params=p,
                          spec=spec, N=int(N), column=int(column),
                          kinetic=kinetic, includes_orbital=False,
                          masked=masked)


def add_orbital(curve, ell=None):
    """ Return a copy of the curve with l(l+1)/2x^2 added.

    Raises
    ------
    ParameterError
        If the curve already includes the term or is not radial.
    DomainError
        If a grid point is at x <= 0.

    """
    if curve.includes_orbital:
        raise ParameterError("The curve already includes the orbital term")
    if curve.spec is not None and not curve.spec.is_radial:
        raise ParameterError("The orbital term only applies to radial cases, "
                             "got {}".format(curve.case_id))
    if ell is None:
        ell = curve.spec.ell if curve.spec is not None else 0
    xs = curve.xs
    if np.any(xs <= 0):
        raise DomainError("The orbital term is singular at x={}".format(
            xs[xs <= 0][0]))
    vs = curve.vs + 0.5 * ell * (ell + 1) / xs ** 2
    return PotentialCurve(xs=xs.copy(), vs=vs, case_id=curve.case_id,
                          params=curve.params, spec=curve.spec, N=curve.N,
                          column=curve.column, kinetic=curve.kinetic,
                          includes_orbital=True, masked=curve.masked)


def orbital_term(xs, ell):
    """ l(l+1)/2x^2 """
    return 0.5 * ell * (ell + 1) / np.asarray(xs, dtype=float) ** 2


def _amplitudes(p, k, N):
    return math.sqrt(weight_discrete(p, k)) * discrete_values(p, N - 1, k)


def bound_state(p, spec, k, N=None, xs=None, tail_tol=BOUND_TAIL_TOL):
    """ The k-th bound state psi_k(x) = sum_{n<N} c_n phi_n(x) with
    c_n = sqrt(omega_k) P_n(z_k^2).

    The amplitudes decay algebraically in n. When N is None it starts at
    DEFAULT_ORDER and doubles until |c_{N-1}| <= tail_tol.

    Returns
    -------
    result: tuple
        The BoundState and the wavefunction samples on xs, by default the
        `bound_grid` of the case.

    Raises
    ------
    ParameterError
        If k is not the index of a bound state.
    ConvergenceError
        If the tail is still above tail_tol at MAX_BOUND_ORDER.

    """
    if not 0 <= k < p.bound_count:
        raise ParameterError("Bound state index k={} outside 0..{}".format(
            k, p.bound_count - 1))
    _check_linkage(p, spec)
    xs = bound_grid(spec) if xs is None else _check_grid(spec, xs)
    if N is None:
        N = DEFAULT_ORDER
        c = _amplitudes(p, k, N)
        while abs(c[-1]) > tail_tol:
            if N >= MAX_BOUND_ORDER:
                raise ConvergenceError(
                    "Bound state {} tail {:.3g} is above {} at N={}".format(
                        k, abs(c[-1]), tail_tol, N))
            N = min(2 * N, MAX_BOUND_ORDER)
            c = _amplitudes(p, k, N)
    else:
        c = _amplitudes(p, k, N)
    psi = c @ eval_basis_all(spec, N, xs)
    state = BoundState(k=int(k), energy=float(spectrum_energies(p)[k]),
                       amplitudes=c, tail=float(abs(c[-1])),
                       norm=float(np.sum(c ** 2)))
    log.debug("Bound state {} at N={}: tail {:.3g}, norm {:.12g}".format(
        k, N, state.tail, state.norm))
    return state, psi


def column_consistency(p, spec, N=DEFAULT_ORDER, xs=None):
    """ Largest deviation between the curves from columns 0 and 1 on the
    points column 1 keeps.

    """
    xs = default_grid(spec) if xs is None else _check_grid(spec, xs)
    V = potential_matrix(p, spec, N)
    keep = _node_mask(spec, N, 1, xs)
    v0 = _column_values(spec, V, 0, xs[keep])
    v1 = _column_values(spec, V, 1, xs[keep])
    return float(np.max(np.abs(v0 - v1)))


def convergence_report(p, spec, N=DEFAULT_ORDER, xs=None, kinetic=MATRIX,
                       trim=DEFAULT_TRIM):
    """ Largest deviation between the column 0 curves at N and 2N.

    Next to the origin of the radial and log cases phi_0 vanishes and the
    column sum converges slowest, so the deviation is reported separately
    on the interior of the grid and on the trimmed edge points.

    Returns
    -------
    result: tuple
        The interior and the edge deviation. The edge one is 0 when trim
        drops no points.

    """
    xs = default_grid(spec) if xs is None else _check_grid(spec, xs)
    a = reconstruct_potential(p, spec, N, 0, xs, kinetic=kinetic)
    b = reconstruct_potential(p, spec, 2 * N, 0, xs, kinetic=kinetic)
    dev = np.abs(a.vs - b.vs)
    inner = interior(len(dev), trim)
    edge = np.ones(len(dev), dtype=bool)
    edge[inner] = False
    result = (float(np.max(dev[inner])),
              float(np.max(dev[edge])) if np.any(edge) else 0.0)
    log.debug("Convergence deviation N={} vs {}: interior {:.3g}, edge "
              "{:.3g}".format(N, 2 * N, *result))
    return result


def convergence_deviation(p, spec, N=DEFAULT_ORDER, xs=None, kinetic=MATRIX,
                          trim=DEFAULT_TRIM):
    """ Largest deviation between the column 0 curves at N and 2N on the
    interior of the grid

    """
    return convergence_report(p, spec, N, xs, kinetic, trim)[0]
