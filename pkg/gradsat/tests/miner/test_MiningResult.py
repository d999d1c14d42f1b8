"""
Unit tests for MiningResult and MiningOptions classes.

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
from fractions import Fraction
import unittest

# External packages
import pytest

# GradSAT
from gradsat.dataset import GradualPattern, Variation
from gradsat.encoder import EncodingOptions
from gradsat.miner import MiningOptions, MiningResult
from gradsat.precedence.chains import DEFAULT_CHAIN_LIMIT
from gradsat.solver import SolverConfig


# --- Constants

S1 = GradualPattern.of((0, Variation.INC), (2, Variation.DEC))
S2 = GradualPattern.of((0, Variation.INC), (1, Variation.INC))


# --- Tests

class MiningResultTests(unittest.TestCase):
    """
    Unit tests for MiningResult class.
    """
    # --- Test cases

    @staticmethod
    def test_init():
        """
        Test construction of MiningResult object. Valid parameters.
        """
        result = MiningResult(S1, Fraction(5, 8), (0, 1, 2, 5, 3),
                              (0, 1, 2, 5, 3))
        assert result.pattern == S1
        assert result.support == Fraction(5, 8)
        assert result.closed is None
        assert result.verified

        flagged = result.with_closed(True)
        assert flagged.closed is True
        assert result.closed is None
        assert flagged.witness == result.witness

    @staticmethod
    def test_init_invalid():
        """
        Test construction of MiningResult object. Invalid parameters.
        """
        cases = [(('(p+, r-)', Fraction(1, 2), (0,), (0,)),
                  "'pattern' is not a GradualPattern"),
                 ((S1, 0.5, (0,), (0,)),
                  "'support' is not a Fraction in (0, 1]"),
                 ((S1, Fraction(0), (0,), (0,)),
                  "'support' is not a Fraction in (0, 1]"),
                 ((S1, Fraction(1, 2), (0,), (0, 1)),
                  "'witness' is shorter than 'model_placement'")]
        for args, expected_error in cases:
            with pytest.raises(ValueError) as exc_info:
                _ = MiningResult(*args)
            assert expected_error in str(exc_info.value)

    @staticmethod
    def test_sort_key():
        """
        Test ordering by descending support, then pattern.
        """
        low = MiningResult(S1, Fraction(5, 8), (0, 1, 2, 5, 3), (0, 1))
        high = MiningResult(S2, Fraction(6, 8), (0, 4, 5, 6, 3, 7), (0, 4))
        tie = MiningResult(S2, Fraction(5, 8), (0, 4, 5, 6, 3), (0, 4))

        assert sorted([low, high, tie], key=MiningResult.sort_key) == \
            [high, tie, low]


class MiningOptionsTests(unittest.TestCase):
    """
    Unit tests for MiningOptions class.
    """
    # --- Test cases

    @staticmethod
    def test_defaults():
        """
        Test default options.
        """
        options = MiningOptions()
        assert options.encoding == EncodingOptions()
        assert options.solver == SolverConfig()
        assert not options.closed
        assert options.verify
        assert options.chain_limit == DEFAULT_CHAIN_LIMIT

    @staticmethod
    def test_invalid():
        """
        Test construction of MiningOptions object. Invalid parameters.
        """
        cases = [({'encoding': 'successor'},
                  "'encoding' is not an EncodingOptions object"),
                 ({'solver': {}}, "'solver' is not a SolverConfig object"),
                 ({'chain_limit': 0},
                  "'chain_limit' is not a positive integer")]
        for kwargs, expected_error in cases:
            with pytest.raises(ValueError) as exc_info:
                _ = MiningOptions(**kwargs)
            assert expected_error in str(exc_info.value)
