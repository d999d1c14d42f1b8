"""
Unit tests for DIMACS reading and writing.

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
import io
import unittest

# External packages
import pytest

# GradSAT
from gradsat.errors import DimacsFormatError
from gradsat.solver import format_model, read_dimacs, write_dimacs


# --- Tests

class DimacsTests(unittest.TestCase):
    """
    Unit tests for read_dimacs(), write_dimacs() and format_model().
    """
    # --- Test cases

    @staticmethod
    def test_read_dimacs():
        """
        Test read_dimacs() on valid input.
        """
        text = 'c first\nc second\np cnf 3 2\n1 -3 0\n2\n3 0\n%\n0\n'
        num_vars, clauses, comments = read_dimacs(text)

        assert num_vars == 3
        assert clauses == [(1, -3), (2, 3)]
        assert comments == ['first', 'second']

        # file-like objects are accepted
        num_vars, clauses, _ = read_dimacs(io.StringIO('p cnf 2 1\n-1 2 0'))
        assert (num_vars, clauses) == (2, [(-1, 2)])

    @staticmethod
    def test_write_dimacs():
        """
        Test write_dimacs() output and re-reading.
        """
        text = write_dimacs(4, [(1, -2), (3, 4, -1)], comments=['demo'])
        assert text == 'c demo\np cnf 4 2\n1 -2 0\n3 4 -1 0\n'
        assert read_dimacs(text) == (4, [(1, -2), (3, 4, -1)], ['demo'])

    @staticmethod
    def test_read_dimacs_invalid():
        """
        Test read_dimacs() on malformed input.
        """
        cases = [('1 2 0\n', 'line 1: clause before header line'),
                 ('p cnf 2\n', "line 1: bad header line 'p cnf 2'"),
                 ('p dnf 2 1\n', 'line 1: bad header line'),
                 ('p cnf x 1\n', 'line 1: invalid number of variables'),
                 ('p cnf -1 1\n', 'line 1: negative number of variables'),
                 ('p cnf 2 1\np cnf 2 1\n', 'line 2: duplicate header'),
                 ('p cnf 2 1\n1 a 0\n', 'line 2: non-integer field'),
                 ('p cnf 2 1\n0\n', 'line 2: empty clause'),
                 ('p cnf 2 1\n1 3 0\n', 'line 2: literal 3 out of range'),
                 ('c only\n', 'missing header line'),
                 ('p cnf 2 1\n1 2\n', 'last clause is not terminated'),
                 ('p cnf 2 2\n1 2 0\n', 'got 1 clauses, expected 2')]
        for text, expected_error in cases:
            with pytest.raises(DimacsFormatError) as exc_info:
                _ = read_dimacs(text)
            assert expected_error in str(exc_info.value)

    @staticmethod
    def test_format_model():
        """
        Test format_model().
        """
        assert format_model([1, -2, 3]) == '1 -2 3'
        assert format_model([]) == ''
