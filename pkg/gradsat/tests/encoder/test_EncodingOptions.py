"""
Unit tests for EncodingOptions class.

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
from gradsat.encoder import EncodingOptions, OrderEncoding, SymmetryMode


# --- Tests

class EncodingOptionsTests(unittest.TestCase):
    """
    Unit tests for EncodingOptions class.
    """
    # --- Test cases

    @staticmethod
    def test_defaults():
        """
        Test default option values.
        """
        options = EncodingOptions()
        assert options.order_encoding is OrderEncoding.SUCCESSOR
        assert options.symmetry is SymmetryMode.BLOCKING
        assert options.min_len == 2
        assert not options.temporal
        assert options.simplify

        assert OrderEncoding('forbidden') is OrderEncoding.FORBIDDEN
        assert SymmetryMode('static') is SymmetryMode.STATIC

    @staticmethod
    def test_invalid():
        """
        Test construction of EncodingOptions object. Invalid parameters.
        """
        with pytest.raises(ValueError) as exc_info:
            _ = EncodingOptions(order_encoding='successor')
        assert "'order_encoding' is not an OrderEncoding" in \
            str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = EncodingOptions(symmetry='static')
        assert "'symmetry' is not a SymmetryMode" in str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = EncodingOptions(min_len=0)
        assert "'min_len' is not a positive integer" in str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = EncodingOptions(symmetry=SymmetryMode.STATIC, temporal=True)
        assert "'symmetry' STATIC cannot be combined with 'temporal'" in \
            str(exc_info.value)
