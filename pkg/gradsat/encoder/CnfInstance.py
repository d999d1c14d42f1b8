"""
CNF formula of a gradual pattern mining problem.

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

# GradSAT
from ..solver.dimacs import write_dimacs
from .VarMap import VarMap


# --- Class definition

class CnfInstance:
    """
    Clauses over 'variable_count' variables together with the VarMap giving
    each variable its meaning and the chain length threshold 'k'.
    """
    # --- Properties

    @property
    def variable_count(self):
        """
        int: number of variables
        """
        return self._variable_count

    @property
    def clauses(self):
        """
        list: clauses as tuples of signed integers
        """
        return self._clauses

    @property
    def num_clauses(self):
        """
        int: number of clauses
        """
        return len(self._clauses)

    @property
    def var_map(self):
        """
        VarMap: meaning of each variable
        """
        return self._var_map

    @property
    def k(self):
        """
        int: chain length threshold
        """
        return self._k

    @property
    def options(self):
        """
        EncodingOptions: options used to build the instance
        """
        return self._options

    @property
    def encoding_time(self):
        """
        float: wall-clock seconds spent building the clauses
        """
        return self._encoding_time

    # --- Public methods

    def __init__(self, clauses, var_map, k, options=None, encoding_time=0.0):
        """
        Initialize CnfInstance object.

        Parameters
        ----------
        clauses: iterable of sequences of int
            clauses of the formula

        var_map: VarMap
            variable numbering

        k: int
            chain length threshold

        options: EncodingOptions
            options used to build the instance

        encoding_time: float
            seconds spent encoding
        """
        # --- Check arguments

        if not isinstance(var_map, VarMap):
            raise ValueError("'var_map' is not a VarMap")

        # --- Set property and attribute values

        self._clauses = [tuple(clause) for clause in clauses]
        self._var_map = var_map
        self._variable_count = var_map.variable_count
        self._k = k
        self._options = options
        self._encoding_time = encoding_time

    def check_hygiene(self):
        """
        Raise ValueError if a clause is empty, tautological, repeats a
        literal or references an unknown variable.
        """
        for index, clause in enumerate(self._clauses):
            if not clause:
                raise ValueError('clause {} is empty'.format(index))

            variables = [abs(lit) for lit in clause]
            if 0 in variables or max(variables) > self._variable_count:
                raise ValueError(
                    'clause {} references an unknown variable'.format(index))

            if len(set(clause)) != len(clause):
                raise ValueError(
                    'clause {} repeats a literal'.format(index))

            if len(set(variables)) != len(variables):
                raise ValueError(
                    'clause {} is tautological'.format(index))

    def to_dimacs(self):
        """
        Serialize the instance in DIMACS CNF with a comment block mapping
        every variable to its meaning.
        """
        comments = ['gradual pattern mining instance, k = {}'.format(self._k)]
        comments.extend(self._var_map.describe(var)
                        for var in range(1, self._variable_count + 1))
        return write_dimacs(self._variable_count, self._clauses, comments)
