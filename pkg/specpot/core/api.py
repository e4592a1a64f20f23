"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 2, 2026

@author: specpot team
"""
from .models import Model, SymMatrix, dumps, loads, decode_state
from .utils import (
    log, clip, find_subclasses, SpecpotError, ConfigError, ParameterError,
    DomainError, NumericError, PoleError, ConvergenceError
)
