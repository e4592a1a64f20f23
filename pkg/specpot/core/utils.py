"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 2, 2026

@author: specpot team
"""
import logging


# -----------------------------------------------------------------------------
# Logger
# -----------------------------------------------------------------------------
log = logging.getLogger("specpot")


def clip(s, n=1000):
    """Shorten the name of a large value when logging"""
    v = str(s)
    if len(v) > n:
        v = v[:n] + "..."
    return v


# -----------------------------------------------------------------------------
# Errors
# -----------------------------------------------------------------------------
class SpecpotError(Exception):
    """ Base class for every error raised by the toolkit """


class ConfigError(SpecpotError):
    """ Bad or unknown configuration values. The cli exits with code 2. """


class ParameterError(SpecpotError):
    """ A parameter regime, linkage, radicand or index violation. """


class DomainError(ParameterError, ValueError):
    """ A coordinate outside the domain of a basis. """


class NumericError(SpecpotError):
    """ A numerical failure. The cli exits with code 3. """


class PoleError(NumericError):
    """ Gamma or Pochhammer evaluated at a pole """


class ConvergenceError(NumericError):
    """ An iterative procedure or quadrature did not settle """


# -----------------------------------------------------------------------------
# Registry helpers
# -----------------------------------------------------------------------------
def find_subclasses(cls):
    """Finds all known (imported) subclasses of the given class"""
    cmds = []
    for subclass in cls.__subclasses__():
        cmds.append(subclass)
        cmds.extend(find_subclasses(subclass))
    return cmds
