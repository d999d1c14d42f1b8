"""
Unit tests for GradualPattern class.

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
from gradsat.dataset import GradualItem, GradualPattern, Variation
from gradsat.dataset import canonical_form, complement, parse_pattern


# --- Constants

NAMES = ['p', 's', 'r']

INC = Variation.INC
DEC = Variation.DEC


# --- Tests

class GradualPatternTests(unittest.TestCase):
    """
    Unit tests for GradualPattern class.
    """
    # --- Test cases

    @staticmethod
    def test_init():
        """
        Test construction of GradualPattern object with valid parameters.
        """
        pattern = GradualPattern((GradualItem(2, DEC), GradualItem(0, INC)))

        assert pattern.items == (GradualItem(0, INC), GradualItem(2, DEC))
        assert pattern.attributes == (0, 2)
        assert len(pattern) == 2
        assert list(pattern) == [GradualItem(0, INC), GradualItem(2, DEC)]
        assert pattern == GradualPattern.of((0, INC), (2, DEC))
        assert hash(pattern) == hash(GradualPattern.of((0, INC), (2, DEC)))

    @staticmethod
    def test_init_invalid():
        """
        Test construction of GradualPattern object. Invalid 'items'.
        """
        with pytest.raises(ValueError) as exc_info:
            _ = GradualPattern(())
        assert "'items' is empty" in str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = GradualPattern((GradualItem(0, INC), (1, DEC)))
        assert "'items' contains a non-GradualItem value" in \
            str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = GradualPattern.of((0, INC), (0, DEC))
        assert "'items' uses an attribute more than once" in \
            str(exc_info.value)

    @staticmethod
    def test_complement():
        """
        Test complement(): involution that flips every variation.
        """
        pattern = GradualPattern.of((0, INC), (2, DEC))
        flipped = GradualPattern.of((0, DEC), (2, INC))

        assert pattern.complement() == flipped
        assert complement(pattern) == flipped
        assert complement(complement(pattern)) == pattern
        assert pattern.complement().attributes == pattern.attributes

    @staticmethod
    def test_canonical_form():
        """
        Test canonical_form(): INC on the lowest attribute.
        """
        pattern = GradualPattern.of((0, INC), (2, DEC))
        flipped = GradualPattern.of((0, DEC), (2, INC))

        assert pattern.is_canonical
        assert not flipped.is_canonical
        assert canonical_form(pattern) == pattern
        assert canonical_form(flipped) == pattern
        assert flipped.canonical_form() == pattern

        # the lowest attribute decides, whatever the others carry
        single = GradualPattern.of((1, DEC))
        assert single.canonical_form() == GradualPattern.of((1, INC))

    @staticmethod
    def test_ordering():
        """
        Test sort_key() and pattern comparison.
        """
        patterns = [GradualPattern.of((0, INC), (2, DEC)),
                    GradualPattern.of((0, INC), (1, INC)),
                    GradualPattern.of((0, INC), (1, DEC)),
                    GradualPattern.of((0, INC), (1, INC), (2, DEC))]

        assert sorted(patterns) == [patterns[1], patterns[3], patterns[2],
                                    patterns[0]]

    @staticmethod
    def test_issubset():
        """
        Test issubset().
        """
        small = GradualPattern.of((0, INC), (2, DEC))
        large = GradualPattern.of((0, INC), (1, INC), (2, DEC))

        assert small.issubset(large)
        assert not large.issubset(small)
        assert not small.complement().issubset(large)

    @staticmethod
    def test_format():
        """
        Test format().
        """
        pattern = GradualPattern.of((0, INC), (2, DEC))
        assert pattern.format(NAMES) == '(p+, r-)'
        assert pattern.format() == '(a0+, a2-)'

    @staticmethod
    def test_parse_pattern():
        """
        Test parse_pattern() with valid and invalid text.
        """
        expected = GradualPattern.of((0, INC), (2, DEC))
        assert parse_pattern('p+ r-', NAMES) == expected
        assert parse_pattern('(r-, p+)', NAMES) == expected
        assert parse_pattern(expected.format(NAMES), NAMES) == expected

        with pytest.raises(ValueError) as exc_info:
            _ = parse_pattern('  ', NAMES)
        assert "'text' contains no gradual items" in str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = parse_pattern('q+', NAMES)
        assert "unknown attribute 'q'" in str(exc_info.value)
