"""
Unit tests for the sequential-counter cardinality encodings.

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
import itertools
import unittest

# External packages
import pytest

# GradSAT
from gradsat.encoder import at_least, at_most, exactly_one
from gradsat.encoder.cardinality import at_least_size, at_most_size


# --- Constants

# auxiliary variables enumerated exhaustively per input assignment
MAX_AUX = 10


# --- Helper functions

def counter_from(start):
    """
    Fresh-variable allocator starting at 'start'.
    """
    variables = itertools.count(start)
    return lambda: next(variables)


def extendable(clauses, fixed, aux_vars):
    """
    True if some assignment of 'aux_vars' satisfies 'clauses' together
    with the literals in 'fixed'.
    """
    for values in itertools.product((False, True), repeat=len(aux_vars)):
        true_lits = set(fixed)
        true_lits.update(var if value else -var
                         for var, value in zip(aux_vars, values))
        if all(any(lit in true_lits for lit in clause)
               for clause in clauses):
            return True
    return False


def check_semantics(encode, width, accepts):
    """
    Check that 'encode' over 'width' literals admits exactly the input
    assignments accepted by 'accepts(count)'.
    """
    literals = list(range(1, width + 1))
    clauses = encode(literals, counter_from(width + 1))
    used = set(abs(lit) for clause in clauses for lit in clause)
    aux_vars = sorted(var for var in used if var > width)

    for values in itertools.product((False, True), repeat=width):
        fixed = [lit if value else -lit
                 for lit, value in zip(literals, values)]
        assert extendable(clauses, fixed, aux_vars) == accepts(sum(values))

    return clauses, aux_vars


# --- Tests

class CardinalityTests(unittest.TestCase):
    """
    Unit tests for at_most(), at_least() and exactly_one().
    """
    # --- Test cases

    @staticmethod
    def test_at_most_semantics():
        """
        Test that at_most() accepts exactly the assignments within bound.
        """
        for width in range(1, 6):
            for bound in range(0, width + 1):
                if at_most_size(width, bound)[0] > MAX_AUX:
                    continue

                def encode(literals, new_var, bound=bound):
                    return at_most(literals, bound, new_var)

                clauses, aux_vars = check_semantics(
                    encode, width, lambda count, bound=bound: count <= bound)
                assert (len(aux_vars), len(clauses)) == \
                    at_most_size(width, bound)

    @staticmethod
    def test_at_least_semantics():
        """
        Test that at_least() accepts exactly the assignments reaching the
        bound.
        """
        for width in range(1, 6):
            for bound in range(0, width + 1):
                if at_least_size(width, bound)[0] > MAX_AUX:
                    continue

                def encode(literals, new_var, bound=bound):
                    return at_least(literals, bound, new_var)

                clauses, aux_vars = check_semantics(
                    encode, width, lambda count, bound=bound: count >= bound)
                assert (len(aux_vars), len(clauses)) == \
                    at_least_size(width, bound)

    @staticmethod
    def test_exactly_one_semantics():
        """
        Test exactly_one().
        """
        for width in range(1, 6):
            clauses, _ = check_semantics(exactly_one, width,
                                         lambda count: count == 1)
            assert clauses[0] == tuple(range(1, width + 1))

    @staticmethod
    def test_at_most_one_size():
        """
        Test the at-most-one size law: w - 1 auxiliaries, 3w - 4 clauses.
        """
        for width in range(2, 12):
            assert at_most_size(width, 1) == (width - 1, 3 * width - 4)

        # general bound r: (w - 1) r auxiliaries
        assert at_most_size(6, 4) == (20, 41)
        assert at_least_size(6, 2) == (20, 41)
        assert at_least_size(6, 1) == (0, 1)

    @staticmethod
    def test_at_least_one_clause():
        """
        Test that at_least() with bound 1 is a single clause.
        """
        assert at_least([1, 3, 5], 1, counter_from(10)) == [(1, 3, 5)]

    @staticmethod
    def test_invalid():
        """
        Test invalid arguments.
        """
        with pytest.raises(ValueError) as exc_info:
            _ = at_most([1, 2], -1, counter_from(3))
        assert "'bound' is negative" in str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = at_most([1, -1], 1, counter_from(3))
        assert "'literals' repeats a variable" in str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = at_least([1, 2], 3, counter_from(3))
        assert "'bound' exceeds the number of literals" in \
            str(exc_info.value)

        with pytest.raises(ValueError) as exc_info:
            _ = exactly_one([], counter_from(1))
        assert "'literals' is empty" in str(exc_info.value)
