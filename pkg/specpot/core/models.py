"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 2, 2026

@author: specpot team
"""
import json
import numpy as np
import jsonpickle as pickle
import jsonpickle.ext.numpy as pickle_numpy
from atom.api import Atom, Typed
from scipy.linalg import eigh_tridiagonal
from .utils import log, clip, ParameterError, ConfigError

pickle_numpy.register_handlers()


# -----------------------------------------------------------------------------
# Core models
# -----------------------------------------------------------------------------
class Model(Atom):
    """ An atom object that only keeps members tagged with
    .tag(config=True) in it's state.

    """

    def __getstate__(self):
        """ Exclude any members from the state that are not tagged with
        `config=True`.

        """
        state = {}
        for name, member in self.members().items():
            metadata = member.metadata
            if metadata and metadata.get('config', False):
                state[name] = getattr(self, name)
        return state

    def __setstate__(self, state):
        """  Set the state ignoring any fields that fail to set which
        may occur due to version changes. Nested models saved as plain
        dicts are rebuilt using the member's declared type.

        """
        members = self.members()
        for key, value in state.items():
            log.debug("Restoring state '{}.{} = {}'".format(
                self.__class__.__name__, key, clip(value)
            ))
            member = members.get(key)
            kind = member.validate_mode[1] if member is not None else None
            if (isinstance(value, dict) and isinstance(kind, type) and
                    issubclass(kind, Model)):
                value = kind.restore(value)
            try:
                setattr(self, key, value)
            except Exception as e:
                #: Shorten any long values
                log.warning("Failed to restore state '{}.{} = {}'".format(
                    self.__class__.__name__, key, clip(value)
                ))

    @classmethod
    def restore(cls, state):
        """ Create a new instance from a state dict """
        obj = cls()
        obj.__setstate__(state)
        return obj

    def flatten(self):
        """ Return the state with any nested models converted to dicts """
        state = self.__getstate__()
        for k, v in state.items():
            if isinstance(v, Model):
                state[k] = v.flatten()
        return state


def dumps(model):
    """ Encode a model as pretty formatted json. Numpy arrays are stored
    losslessly by the jsonpickle numpy handlers.

    """
    payload = {'type': model.__class__.__name__, 'state': model.flatten()}
    state = pickle.dumps(payload)

    #: Pretty format it
    return json.dumps(json.loads(state), indent=2)


def decode_state(text, cls):
    """ Decode json created by `dumps`, or a plain json object, into the
    state dict of a cls instance.

    Raises
    ------
    ConfigError
        If the payload is not valid json or was saved from another type.

    """
    try:
        payload = pickle.loads(text)
    except Exception as e:
        raise ConfigError("Could not decode json: {}".format(e))
    if not isinstance(payload, dict):
        raise ConfigError("Expected a json object, got {}".format(
            type(payload).__name__))
    if 'state' not in payload:
        #: A plain state dict
        return payload
    if payload.get('type') != cls.__name__:
        raise ConfigError("Expected a '{}' but got '{}'".format(
            cls.__name__, payload.get('type')))
    return payload['state']


def loads(text, cls):
    """ Decode json created by `dumps` back into an instance of cls """
    return cls.restore(decode_state(text, cls))


# -----------------------------------------------------------------------------
# Matrices
# -----------------------------------------------------------------------------
class SymMatrix(Model):
    """ A real symmetric N x N matrix in dense storage with an optional
    declared bandwidth (0 diagonal, 1 tridiagonal, 2 penta-diagonal, None
    for dense).

    Entries are read only once created.

    """
    #: Dense entries
    entries = Typed(np.ndarray).tag(config=True)

    #: Declared bandwidth or None when dense
    bandwidth = Typed(int).tag(config=True)

    @classmethod
    def from_array(cls, a, bandwidth=None):
        """ Validate and wrap a square array.

        Parameters
        ----------
        a: array_like
            A square, exactly symmetric array.
        bandwidth: int or None
            Entries further than this from the diagonal must be exactly zero.

        Raises
        ------
        ParameterError
            If the array is not square, not symmetric or violates the band.

        """
        a = np.array(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ParameterError("Matrix must be square and non-empty, "
                                 "got shape {}".format(a.shape))
        if not np.array_equal(a, a.T):
            raise ParameterError("Matrix is not symmetric")
        if bandwidth is not None:
            bandwidth = int(bandwidth)
            n = a.shape[0]
            i, j = np.indices((n, n))
            if np.any(a[np.abs(i - j) > bandwidth]):
                raise ParameterError(
                    "Matrix has entries outside bandwidth {}".format(
                        bandwidth))
        a.setflags(write=False)
        return cls(entries=a, bandwidth=bandwidth)

    @classmethod
    def tridiagonal(cls, diag, off):
        """ Create a tridiagonal matrix from its diagonal and off-diagonal """
        diag = np.asarray(diag, dtype=float)
        off = np.asarray(off, dtype=float)
        a = np.diag(diag)
        if len(off):
            a += np.diag(off, 1) + np.diag(off, -1)
        return cls.from_array(a, bandwidth=1)

    @property
    def order(self):
        return self.entries.shape[0]

    def entry(self, n, m):
        return float(self.entries[n, m])

    def column(self, n):
        return self.entries[:, n].copy()

    def diagonal(self, k=0):
        return np.diagonal(self.entries, k).copy()

    def to_array(self):
        return self.entries.copy()

    def scaled(self, c):
        return SymMatrix.from_array(c * self.entries, self.bandwidth)

    def perturbed(self, n, m, delta):
        """ Return a copy with delta added to entries (n, m) and (m, n) """
        a = self.to_array()
        a[n, m] += delta
        if n != m:
            a[m, n] += delta
        return SymMatrix.from_array(a, self.bandwidth)

    def __sub__(self, other):
        if self.order != other.order:
            raise ParameterError("Matrix orders differ: {} vs {}".format(
                self.order, other.order))
        if self.bandwidth is None or other.bandwidth is None:
            bandwidth = None
        else:
            bandwidth = max(self.bandwidth, other.bandwidth)
        return SymMatrix.from_array(self.entries - other.entries, bandwidth)

    def eigenvalues(self):
        """ Ascending eigenvalues. Banded tridiagonal matrices use the
        symmetric tridiagonal solver.

        """
        if self.bandwidth is not None and self.bandwidth <= 1:
            if self.order == 1:
                return self.diagonal()
            return eigh_tridiagonal(self.diagonal(), self.diagonal(1),
                                    eigvals_only=True)
        return np.linalg.eigvalsh(self.entries)

    def to_csv(self):
        lines = ["# N={}".format(self.order)]
        for row in self.entries:
            lines.append(",".join("%.17g" % v for v in row))
        return "\n".join(lines) + "\n"
