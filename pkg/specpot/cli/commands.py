"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 11, 2026

@author: specpot team

The `specpot` sub commands.

"""
import sys
import numpy as np
from specpot.core.api import dumps, log
from specpot.polynomial.hamiltonian import (
    build_sigma, energy_ladder, converged_energies, LADDER_TOL
)
from specpot.basis.kinetic import build_kinetic, ANALYTIC, ORACLE
from specpot.potential.reconstruct import (
    reconstruct_potential, add_orbital, column_consistency, convergence_report
)
from specpot.potential.fit import fit_curve, REGISTRY as FIT_MODELS
from specpot.basis.models import CASES
from .extensions import CliCommand, EXIT_OK, EXIT_VALIDATION
from specpot.potential.models import KINETIC_COLUMNS
from .config import resolve_config, PRESETS, CSV, JSON
from .suites import run_suites


def write_output(config, model):
    """ Write a model as csv or json to the configured path or stdout """
    text = dumps(model) + "\n" if config.fmt == JSON else model.to_csv()
    if config.out:
        with open(config.out, 'w') as f:
            f.write(text)
        log.info("Wrote {} to {}".format(model.__class__.__name__,
                                         config.out))
    else:
        sys.stdout.write(text)


def cmd_spectrum(cmd):
    """ Print the bound state energies. With --check the levels that have
    settled between N and 2N are compared to the eigenvalues of the
    truncated Hamiltonian.

    """
    config = resolve_config(cmd.args)
    p = config.poly_params()
    ladder = energy_ladder(p)
    write_output(config, ladder)
    if cmd.args.check:
        eig, stable = converged_energies(p, config.N, LADDER_TOL)
        for i, (e, h, s) in enumerate(zip(ladder.energies, eig, stable)):
            log.info("Level {}: E={:.12g} H eigenvalue={:.12g}{}".format(
                i, e, h, "" if s else " (not settled)"))
        if not (len(stable) and stable[0]):
            log.warning("The lowest level has not settled at N={}".format(
                config.N))
            return EXIT_VALIDATION
        error = np.abs(eig - ladder.energies[:len(eig)])[stable]
        if np.max(error) > LADDER_TOL:
            log.warning("Matrix spectrum at N={} differs from the ladder "
                        "by more than {}".format(config.N, LADDER_TOL))
            return EXIT_VALIDATION
    return EXIT_OK


def cmd_sigma(cmd):
    config = resolve_config(cmd.args)
    write_output(config, build_sigma(config.poly_params(), config.N))
    return EXIT_OK


def cmd_kinetic(cmd):
    config = resolve_config(cmd.args)
    method = ORACLE if cmd.args.oracle else ANALYTIC
    build = build_kinetic(config.basis_spec(), config.N, method,
                          order=cmd.args.quad_order)
    write_output(config, build.matrix)
    return EXIT_OK


def cmd_reconstruct(cmd):
    config = resolve_config(cmd.args)
    p, spec = config.poly_params(), config.basis_spec()
    xs = config.grid()
    curve = reconstruct_potential(p, spec, config.N, config.column, xs,
                                  kinetic=config.kinetic)
    if config.column > 0:
        curve.consistency = column_consistency(p, spec, config.N, xs)
        log.info("Column {} vs column 0 deviation {:.3g}".format(
            config.column, curve.consistency))
    if cmd.args.convergence:
        curve.convergence, curve.edge_convergence = convergence_report(
            p, spec, config.N, xs, kinetic=config.kinetic)
        log.info("N={} vs N={} deviation {:.3g} inside, {:.3g} at the "
                 "ends".format(config.N, 2 * config.N, curve.convergence,
                               curve.edge_convergence))
    if config.orbital:
        curve = add_orbital(curve)
    write_output(config, curve)
    return EXIT_OK


def cmd_fit(cmd):
    config = resolve_config(cmd.args)
    p, spec = config.poly_params(), config.basis_spec()
    curve = reconstruct_potential(p, spec, config.N, config.column,
                                  config.grid(), kinetic=config.kinetic)
    if config.orbital:
        curve = add_orbital(curve)
    write_output(config, fit_curve(curve, config.fit_model()))
    return EXIT_OK


def cmd_validate(cmd):
    """ Run the self checks, exit with 1 if any fails """
    config = resolve_config(cmd.args)
    results = run_suites(config, perturb=cmd.args.perturb or 0.0,
                         quad_order=cmd.args.quad_order)
    failed = [r for r in results if not r.passed]
    if cmd.args.verbose:
        lines = ["{:<12} {:<44} {:>12} {:>10}  {}".format(
            'suite', 'check', 'value', 'tol', 'result')]
        lines.extend(r.row() for r in results)
        sys.stdout.write("\n".join(lines) + "\n")
    sys.stdout.write("{} checks, {} failed\n".format(len(results),
                                                      len(failed)))
    for r in failed:
        log.warning("Check failed: {} {} value={} tol={}".format(
            r.suite, r.name, r.value, r.tol))
    return EXIT_VALIDATION if failed else EXIT_OK


# -----------------------------------------------------------------------------
# Declarations
# -----------------------------------------------------------------------------
COMMON_ARGS = [
    ('--preset', dict(choices=sorted(PRESETS), help="Worked example "
                                                     "parameters")),
    ('--config', dict(help="Config json file")),
    ('--save-config', dict(help="Write the resolved config to this path")),
    ('--case', dict(choices=CASES, help="Basis case")),
    ('--lambda', dict(dest='lam', type=float, help="Inverse length lam")),
    ('--mu', dict(type=float, help="Spectrum parameter mu")),
    ('--ell', dict(type=int, help="Angular momentum of radial cases")),
    ('--gamma', dict(type=float, help="Scale of the log case")),
    ('--nu', dict(type=float, help="Laguerre index, by default linked to "
                                   "the case")),
    ('--a', dict(type=float, help="Polynomial parameter a, default 1-mu")),
    ('--b', dict(type=float, help="Polynomial parameter b, default 1-mu")),
    ('--nmax', dict(type=int, help="Truncation order N")),
    ('--grid-min', dict(type=float)),
    ('--grid-max', dict(type=float)),
    ('--grid-points', dict(type=int)),
    ('--column', dict(type=int, help="Column of V used to rebuild V(x)")),
    ('--orbital', dict(action='store_const', const=True,
                       help="Add l(l+1)/2x^2 to radial curves")),
    ('--kinetic', dict(choices=KINETIC_COLUMNS,
                        help="Kinetic part of column 0 from the truncated "
                             "MATRIX or its LOCAL closed form")),
    ('--format', dict(choices=[CSV, JSON], help="Output format")),
    ('--out', dict(help="Output path, stdout by default")),
]

QUAD_ORDER_ARG = ('--quad-order', dict(type=int, help="Starting quadrature "
                                                     "order"))

COMMANDS = [
    CliCommand(
        name='spectrum', help="Bound state energies",
        desc="Print E_k = -lam^2 (k + mu)^2 / 2",
        args=COMMON_ARGS + [
            ('--check', dict(action='store_true',
                             help="Compare with the matrix eigenvalues")),
        ],
        handler=cmd_spectrum),
    CliCommand(
        name='sigma', help="Recursion matrix Sigma",
        desc="Print the truncated tridiagonal matrix Sigma",
        args=COMMON_ARGS, handler=cmd_sigma),
    CliCommand(
        name='kinetic', help="Kinetic energy matrix",
        desc="Print the kinetic energy matrix in the basis",
        args=COMMON_ARGS + [
            ('--oracle', dict(action='store_true',
                              help="Use the quadrature oracle")),
            QUAD_ORDER_ARG,
        ],
        handler=cmd_kinetic),
    CliCommand(
        name='reconstruct', help="Rebuild V(x)",
        desc="Rebuild V(x) from one column of V = H - T",
        args=COMMON_ARGS + [
            ('--convergence', dict(action='store_true',
                                   help="Report the N vs 2N deviation")),
        ],
        handler=cmd_reconstruct),
    CliCommand(
        name='fit', help="Fit V(x) to an analytic form",
        desc="Rebuild V(x) and fit it by linear least squares",
        args=COMMON_ARGS + [
            ('--model', dict(choices=sorted(FIT_MODELS),
                             help="Fit model, by default the case model")),
        ],
        handler=cmd_fit),
    CliCommand(
        name='validate', help="Run the self checks",
        desc="Run the orthogonality, integral, kinetic, Morse and ladder "
             "checks",
        args=COMMON_ARGS + [
            ('--verbose', dict(action='store_true',
                               help="Print the table of checks")),
            ('--perturb', dict(type=float,
                               help="Offset Sigma_00 to test the checks")),
            QUAD_ORDER_ARG,
        ],
        handler=cmd_validate),
]
