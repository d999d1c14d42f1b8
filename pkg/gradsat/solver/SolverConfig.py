"""
Configuration of the CDCL solver.

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""
# pylint: disable=invalid-name,too-many-instance-attributes

# --- Imports

# Standard library
from dataclasses import dataclass
from typing import Optional


# --- Constants

PHASE_POLICIES = ('saved', 'positive', 'negative')


# --- Class definition

@dataclass(frozen=True)
class SolverConfig:
    """
    Heuristic parameters and resource caps of CdclSolver.

    Attributes
    ----------
    var_decay, clause_decay: float
        activity decay factors in (0, 1]

    restarts: bool
        enable the geometric restart schedule

    restart_base, restart_factor: int, float
        first restart after 'restart_base' conflicts, then the interval is
        multiplied by 'restart_factor'

    reduce_base, reduce_factor: int, float
        learnt clause count triggering the first reduction, and its growth
        factor

    phase: str
        polarity of decisions: 'saved', 'positive' or 'negative'; the first
        decision after every restart is always positive

    random_var_freq: float
        probability of a random decision variable

    seed: int
        seed of the random generator

    max_models, max_conflicts: int or None
        resource caps

    record_learnts: bool
        keep every learnt clause (units included) in 'learnt_history'
    """
    var_decay: float = 0.95
    clause_decay: float = 0.999
    restarts: bool = True
    restart_base: int = 100
    restart_factor: float = 1.5
    reduce_base: int = 2000
    reduce_factor: float = 1.1
    phase: str = 'saved'
    random_var_freq: float = 0.0
    seed: int = 0
    max_models: Optional[int] = None
    max_conflicts: Optional[int] = None
    record_learnts: bool = False

    def __post_init__(self):
        # --- Check arguments

        for name in ('var_decay', 'clause_decay'):
            if not 0 < getattr(self, name) <= 1:
                raise ValueError("'{}' is not in (0, 1]".format(name))

        for name in ('restart_base', 'reduce_base'):
            if getattr(self, name) < 1:
                raise ValueError(
                    "'{}' is not a positive integer".format(name))

        for name in ('restart_factor', 'reduce_factor'):
            if getattr(self, name) < 1:
                raise ValueError("'{}' is smaller than 1".format(name))

        if self.phase not in PHASE_POLICIES:
            raise ValueError(
                "'phase' is not one of {}".format(', '.join(PHASE_POLICIES)))

        if not 0 <= self.random_var_freq <= 1:
            raise ValueError("'random_var_freq' is not in [0, 1]")

        for name in ('max_models', 'max_conflicts'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(
                    "'{}' is not a positive integer".format(name))
