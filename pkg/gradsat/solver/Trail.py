"""
Assignment trail of the CDCL solver.

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""
# pylint: disable=invalid-name


# --- Class definition

class Trail:
    """
    Assigned literals in assignment order, with the decision level and
    reason clause of every assigned variable.

    The per-variable lists are indexed by variable (index 0 unused) and
    exposed directly for the propagation loop: 'values' holds True, False
    or None (unassigned).
    """
    # --- Properties

    @property
    def decision_level(self):
        """
        int: current decision level
        """
        return len(self.limits)

    @property
    def num_assigned(self):
        """
        int: number of assigned variables
        """
        return len(self.literals)

    # --- Public methods

    def __init__(self, num_vars):
        """
        Initialize Trail object.

        Parameters
        ----------
        num_vars: int
            number of variables
        """
        self.values = [None] * (num_vars + 1)
        self.levels = [0] * (num_vars + 1)
        self.reasons = [None] * (num_vars + 1)
        self.literals = []
        self.limits = []
        self.qhead = 0

    def value(self, lit):
        """
        Truth value of a literal: True, False or None.
        """
        value = self.values[abs(lit)]
        if value is None:
            return None
        return value if lit > 0 else not value

    def assign(self, lit, reason=None):
        """
        Make 'lit' true at the current decision level.
        """
        var = abs(lit)
        if self.values[var] is not None:
            raise ValueError("'lit' is already assigned")

        self.values[var] = lit > 0
        self.levels[var] = len(self.limits)
        self.reasons[var] = reason
        self.literals.append(lit)

    def new_decision_level(self):
        """
        Open a new decision level.
        """
        self.limits.append(len(self.literals))

    def backtrack(self, level):
        """
        Unassign every literal above decision 'level'.

        Return values
        -------------
        list: unassigned literals, most recent first
        """
        if level >= len(self.limits):
            return []

        cut = self.limits[level]
        undone = self.literals[cut:]
        undone.reverse()
        for lit in undone:
            var = abs(lit)
            self.values[var] = None
            self.reasons[var] = None

        del self.literals[cut:]
        del self.limits[level:]
        self.qhead = min(self.qhead, cut)

        return undone
