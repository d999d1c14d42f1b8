"""
Unit tests for SolverConfig class.

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""
# pylint: disable=invalid-name

# --- Imports

# Standard library
import unittest

# External packages
import pytest

# GradSAT
from gradsat.solver import SolverConfig


# --- Tests

class SolverConfigTests(unittest.TestCase):
    """
    Unit tests for SolverConfig class.
    """
    # --- Test cases

    @staticmethod
    def test_defaults():
        """
        Test default configuration values.
        """
        config = SolverConfig()
        assert config.var_decay == 0.95
        assert config.clause_decay == 0.999
        assert config.restarts
        assert config.restart_base == 100
        assert config.restart_factor == 1.5
        assert config.reduce_base == 2000
        assert config.phase == 'saved'
        assert config.random_var_freq == 0.0
        assert config.seed == 0
        assert config.max_models is None
        assert config.max_conflicts is None

    @staticmethod
    def test_invalid():
        """
        Test construction of SolverConfig object. Invalid parameters.
        """
        cases = [({'var_decay': 0}, "'var_decay' is not in (0, 1]"),
                 ({'clause_decay': 1.5}, "'clause_decay' is not in (0, 1]"),
                 ({'restart_base': 0},
                  "'restart_base' is not a positive integer"),
                 ({'restart_factor': 0.5},
                  "'restart_factor' is smaller than 1"),
                 ({'phase': 'random'}, "'phase' is not one of saved"),
                 ({'random_var_freq': 2},
                  "'random_var_freq' is not in [0, 1]"),
                 ({'max_models': 0}, "'max_models' is not a positive"),
                 ({'max_conflicts': -1},
                  "'max_conflicts' is not a positive")]
        for kwargs, expected_error in cases:
            with pytest.raises(ValueError) as exc_info:
                _ = SolverConfig(**kwargs)
            assert expected_error in str(exc_info.value)
