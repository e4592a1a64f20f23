"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 11, 2026

@author: specpot team

Run configuration, presets and config files.

"""
import os
from atom.api import Bool, Enum, Float, Instance, Int, Str
from specpot.core.api import Model, dumps, decode_state, log, ConfigError
from specpot.polynomial.models import PolyParams
from specpot.basis.models import (
    BasisSpec, CASES, COULOMB_LINEAR, OSCILLATOR, LOG, MORSE
)
from specpot.polynomial.hamiltonian import DEFAULT_ORDER
from specpot.potential.models import LOCAL, KINETIC_COLUMNS
from specpot.potential.reconstruct import default_grid, DEFAULT_POINTS

CSV = 'csv'
JSON = 'json'

#: Parameter sets of the four worked examples
PRESETS = {
    'fig1': dict(case_id=COULOMB_LINEAR, lam=1.0, ell=3, mu=-3.2,
                 model='COULOMB_PLUS_LINEAR'),
    'fig2': dict(case_id=OSCILLATOR, lam=1.0, ell=2, mu=-4.2,
                 model='HARMONIC'),
    'fig3': dict(case_id=LOG, lam=5.0, mu=-4.2, gamma=2.0,
                 model='LOGARITHMIC', kinetic=LOCAL),
    'fig4': dict(case_id=MORSE, lam=1.0, mu=-4.7, model='MORSE_EXACT'),
}

#: Fit model used when none is configured
DEFAULT_MODELS = {
    COULOMB_LINEAR: 'COULOMB_PLUS_LINEAR',
    OSCILLATOR: 'HARMONIC',
    LOG: 'LOGARITHMIC',
    MORSE: 'MORSE_EXACT',
}

#: Command line dest names mapped to config members
FLAG_NAMES = {
    'case': 'case_id', 'lam': 'lam', 'mu': 'mu', 'ell': 'ell',
    'gamma': 'gamma', 'nu': 'nu', 'a': 'a', 'b': 'b', 'nmax': 'N',
    'grid_min': 'grid_min', 'grid_max': 'grid_max',
    'grid_points': 'grid_points', 'column': 'column', 'orbital': 'orbital',
    'kinetic': 'kinetic', 'model': 'model', 'format': 'fmt', 'out': 'out',
}

#: Members holding a float or None
OPTIONAL_FLOATS = ('a', 'b', 'nu', 'grid_min', 'grid_max')


class RunConfig(Model):
    """ Everything a command needs to run. None means use the rule of the
    case (a = b = 1 - mu, the nu linkage, the case grid).

    """
    case_id = Enum(*CASES).tag(config=True)
    lam = Float(1.0).tag(config=True)
    mu = Float(-4.2).tag(config=True)
    ell = Int(0).tag(config=True)
    gamma = Float(2.0).tag(config=True)
    a = Instance(float).tag(config=True)
    b = Instance(float).tag(config=True)
    nu = Instance(float).tag(config=True)

    #: Truncation order
    N = Int(DEFAULT_ORDER).tag(config=True)

    grid_min = Instance(float).tag(config=True)
    grid_max = Instance(float).tag(config=True)
    grid_points = Int(DEFAULT_POINTS).tag(config=True)

    #: Column of the potential matrix used for reconstruction
    column = Int(0).tag(config=True)

    #: Add the orbital term to radial curves
    orbital = Bool(False).tag(config=True)

    #: How the kinetic part of column 0 is removed, from the truncated
    #: matrix or from its closed form limit
    kinetic = Enum(*KINETIC_COLUMNS).tag(config=True)

    #: Fit model id, the case default when empty
    model = Str().tag(config=True)

    fmt = Enum(CSV, JSON).tag(config=True)

    #: Output path, stdout when empty
    out = Str().tag(config=True)

    def update(self, values):
        """ Set values from a dict. Unlike restoring a saved state this is
        strict.

        Raises
        ------
        ConfigError
            If a key is unknown or a value has the wrong type.

        """
        members = self.members()
        for key, value in values.items():
            member = members.get(key)
            if member is None or not (member.metadata or {}).get('config'):
                raise ConfigError("Unknown config key '{}'".format(key))
            is_int = isinstance(value, int) and not isinstance(value, bool)
            if is_int and (key in OPTIONAL_FLOATS or
                           isinstance(getattr(self, key), float)):
                value = float(value)
            try:
                setattr(self, key, value)
            except Exception as e:
                raise ConfigError("Invalid value {}={!r}: {}".format(
                    key, value, e))

    def apply_preset(self, name):
        preset = PRESETS.get(name)
        if preset is None:
            raise ConfigError("Unknown preset '{}', choose from {}".format(
                name, sorted(PRESETS)))
        log.debug("Applying preset {}".format(name))
        self.update(preset)

    @classmethod
    def load(cls, path):
        """ Load a config file saved with `save` or a plain json object """
        config = cls()
        config.update(cls.read(path))
        return config

    @classmethod
    def read(cls, path):
        """ Read the raw key value pairs of a config file """
        if not os.path.exists(path):
            raise ConfigError("Config file '{}' does not exist".format(path))
        with open(path) as f:
            return decode_state(f.read(), cls)

    def save(self, path):
        with open(path, 'w') as f:
            f.write(dumps(self))

    def poly_params(self):
        """ Validated polynomial parameters """
        return PolyParams.create(self.mu, self.lam, self.a, self.b)

    def basis_spec(self):
        """ Validated basis with the nu linkage of the case """
        return BasisSpec.for_case(self.case_id, lam=self.lam, ell=self.ell,
                                  gamma=self.gamma, nu=self.nu, mu=self.mu)

    def grid(self):
        return default_grid(self.basis_spec(), self.grid_points,
                            self.grid_min, self.grid_max)

    def fit_model(self):
        return self.model or DEFAULT_MODELS[self.case_id]

    def validate(self):
        """ Check the polynomial and basis parameters and the run sizes """
        if self.N < 1:
            raise ConfigError("nmax must be positive, got {}".format(self.N))
        if not 0 <= self.column < self.N:
            raise ConfigError("column must be in 0..{}, got {}".format(
                self.N - 1, self.column))
        if self.kinetic == LOCAL and self.column != 0:
            raise ConfigError("kinetic {} needs column 0, got {}".format(
                LOCAL, self.column))
        self.poly_params()
        self.basis_spec()


def resolve_config(args):
    """ Build the config with precedence defaults < preset < config file <
    explicit flags. A config file only sets the keys it contains.

    Parameters
    ----------
    args: Namespace
        Parsed arguments. Flags that were not given are None.

    """
    config = RunConfig()
    preset = getattr(args, 'preset', None)
    if preset:
        config.apply_preset(preset)
    path = getattr(args, 'config', None)
    if path:
        config.update(RunConfig.read(path))
    flags = {}
    for dest, key in FLAG_NAMES.items():
        value = getattr(args, dest, None)
        if value is not None:
            flags[key] = value
    config.update(flags)
    config.validate()
    save_path = getattr(args, 'save_config', None)
    if save_path:
        config.save(save_path)
        log.info("Saved config to {}".format(save_path))
    return config
