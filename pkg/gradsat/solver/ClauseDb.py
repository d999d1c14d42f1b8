"""
Clause storage with two-watched-literal indices.

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""
# pylint: disable=invalid-name,too-few-public-methods


# --- Class definitions

class Clause:
    """
    Clause of the solver. The first two literals are the watched ones.
    """
    __slots__ = ['literals', 'learnt', 'blocking', 'activity', 'deleted']

    def __init__(self, literals, learnt=False, blocking=False):
        self.literals = list(literals)
        self.learnt = learnt
        self.blocking = blocking
        self.activity = 0.0
        self.deleted = False

    def __len__(self):
        return len(self.literals)

    def __repr__(self):
        return 'Clause({})'.format(self.literals)


class ClauseDb:
    """
    Original clauses (permanent, blocking clauses included) and learnt
    clauses (reducible), with the watch lists of every literal.

    watches[lit] lists the clauses watching 'lit'; they are visited when
    'lit' becomes false.
    """
    # --- Properties

    @property
    def original(self):
        """
        list: permanent clauses of length >= 2
        """
        return self._original

    @property
    def learnts(self):
        """
        list: learnt clauses of length >= 2 still in the database
        """
        return self._learnts

    @property
    def watches(self):
        """
        dict: literal -> list of watching clauses
        """
        return self._watches

    # --- Public methods

    def __init__(self, num_vars):
        """
        Initialize ClauseDb object.

        Parameters
        ----------
        num_vars: int
            number of variables
        """
        self._original = []
        self._learnts = []
        self._watches = {}
        for var in range(1, num_vars + 1):
            self._watches[var] = []
            self._watches[-var] = []

    def attach(self, clause):
        """
        Store a clause of length >= 2 and watch its first two literals.
        """
        if len(clause) < 2:
            raise ValueError("'clause' has fewer than two literals")

        if clause.learnt:
            self._learnts.append(clause)
        else:
            self._original.append(clause)

        self._watches[clause.literals[0]].append(clause)
        self._watches[clause.literals[1]].append(clause)

    def remove_learnts(self, doomed):
        """
        Delete learnt clauses. Watch lists drop them lazily.
        """
        doomed_ids = set(id(clause) for clause in doomed)
        for clause in doomed:
            if not clause.learnt:
                raise ValueError("'doomed' contains a permanent clause")
            clause.deleted = True

        self._learnts = [clause for clause in self._learnts
                         if id(clause) not in doomed_ids]
