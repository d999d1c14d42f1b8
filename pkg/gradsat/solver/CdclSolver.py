"""
Conflict-driven clause learning SAT solver with model enumeration.

Literals are DIMACS integers: variable v is the literal v, its negation -v.

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
import heapq
import logging

# External packages
import numpy

# GradSAT
from ..errors import ResourceLimitError
from .ClauseDb import Clause, ClauseDb
from .SolverConfig import SolverConfig
from .Trail import Trail


# --- Constants

_LOGGER = logging.getLogger(__name__)

_VAR_RESCALE_LIMIT = 1e100
_CLAUSE_RESCALE_LIMIT = 1e20


# --- Class definition

class CdclSolver:
    """
    CDCL solver: two watched literals, First-UIP learning, VSIDS decisions
    with phase saving, geometric restarts and activity-based reduction of
    the learnt clause database.

    Clauses are only added at decision level 0; the solver backtracks there
    first. enumerate() turns the solver into an AllSAT engine: after each
    model the caller supplies blocking clauses, which become permanent.
    """
    # --- Properties

    @property
    def num_vars(self):
        """
        int: number of variables
        """
        return self._num_vars

    @property
    def config(self):
        """
        SolverConfig: solver configuration
        """
        return self._config

    @property
    def trail(self):
        """
        Trail: current partial assignment
        """
        return self._trail

    @property
    def clause_db(self):
        """
        ClauseDb: clause database
        """
        return self._db

    @property
    def ok(self):
        """
        bool: False once the clauses added so far are known unsatisfiable
        """
        return self._ok

    @property
    def stats(self):
        """
        dict: search counters (decisions, propagations, conflicts, restarts,
        reductions, models)
        """
        return dict(self._stats)

    @property
    def learnt_clauses(self):
        """
        list of tuples: learnt clauses currently in the database
        """
        return [tuple(clause.literals) for clause in self._db.learnts]

    @property
    def learnt_history(self):
        """
        list of tuples: every learnt clause, units included; only recorded
        with config.record_learnts
        """
        return list(self._learnt_history)

    @property
    def blocking_clauses(self):
        """
        list of tuples: blocking clauses added by enumerate()
        """
        return list(self._blocking_clauses)

    # --- Public methods

    def __init__(self, num_vars, clauses=(), config=None):
        """
        Initialize CdclSolver object.

        Parameters
        ----------
        num_vars: int
            number of variables; literals range over +/-1..num_vars

        clauses: iterable of sequences of int
            initial clauses

        config: SolverConfig
            solver configuration; defaults to SolverConfig()
        """
        # --- Check arguments

        if isinstance(num_vars, bool) or not isinstance(num_vars, int) or \
                num_vars < 0:
            raise ValueError("'num_vars' is not a non-negative integer")

        if config is None:
            config = SolverConfig()

        if not isinstance(config, SolverConfig):
            raise ValueError("'config' is not a SolverConfig object")

        # --- Set property and attribute values

        self._num_vars = num_vars
        self._config = config
        self._trail = Trail(num_vars)
        self._db = ClauseDb(num_vars)
        self._ok = True

        self._activity = [0.0] * (num_vars + 1)
        self._var_inc = 1.0
        self._clause_inc = 1.0
        self._heap = [(-0.0, var) for var in range(1, num_vars + 1)]
        self._saved_phase = [False] * (num_vars + 1)
        self._force_positive = True
        self._rng = numpy.random.default_rng(config.seed)

        self._restart_limit = float(config.restart_base)
        self._conflicts_since_restart = 0
        self._max_learnts = float(config.reduce_base)

        self._learnt_history = []
        self._blocking_clauses = []
        self._stats = {'decisions': 0, 'propagations': 0, 'conflicts': 0,
                       'restarts': 0, 'reductions': 0, 'models': 0}

        for clause in clauses:
            self.add_clause(clause)

    @classmethod
    def from_instance(cls, instance, config=None):
        """
        Solver over the clauses of a CnfInstance.
        """
        return cls(instance.variable_count, instance.clauses, config)

    def add_clause(self, literals, blocking=False):
        """
        Add a permanent clause at decision level 0.

        The clause is simplified against the level-0 assignment: satisfied
        clauses are dropped and false literals removed. An empty result
        makes the formula unsatisfiable; a unit result is enqueued.

        Parameters
        ----------
        literals: sequence of int
            clause literals

        blocking: bool
            record the clause as a blocking clause

        Return values
        -------------
        bool: False if the formula is now known unsatisfiable
        """
        literals = list(literals)
        for lit in literals:
            if isinstance(lit, bool) or not isinstance(lit, int) or \
                    lit == 0 or abs(lit) > self._num_vars:
                raise ValueError(
                    "'literals' contains an invalid literal: {}".format(lit))

        if blocking:
            self._blocking_clauses.append(tuple(literals))

        if not self._ok:
            return False

        self._backtrack(0)

        trail = self._trail
        simplified = []
        for lit in dict.fromkeys(literals):
            if -lit in simplified:
                return True
            value = trail.value(lit)
            if value is True:
                return True
            if value is None:
                simplified.append(lit)

        if not simplified:
            self._ok = False
        elif len(simplified) == 1:
            trail.assign(simplified[0])
        else:
            self._db.attach(Clause(simplified, blocking=blocking))

        return self._ok

    def unit_propagate(self):
        """
        Propagate the pending trail literals through the watch lists.

        Return values
        -------------
        Clause or None: a conflicting clause, or None at fixpoint
        """
        trail = self._trail
        values = trail.values
        watches = self._db.watches
        literals = trail.literals
        propagations = 0
        conflict = None

        while trail.qhead < len(literals):
            false_lit = -literals[trail.qhead]
            trail.qhead += 1
            propagations += 1

            watchers = watches[false_lit]
            kept = []
            index = 0
            count = len(watchers)
            while index < count:
                clause = watchers[index]
                index += 1
                if clause.deleted:
                    continue

                lits = clause.literals
                if lits[0] == false_lit:
                    lits[0], lits[1] = lits[1], false_lit

                first = lits[0]
                value = values[first if first > 0 else -first]
                if value is not None and value == (first > 0):
                    kept.append(clause)
                    continue

                # look for a new literal to watch
                for position in range(2, len(lits)):
                    lit = lits[position]
                    value = values[lit if lit > 0 else -lit]
                    if value is None or value == (lit > 0):
                        lits[1], lits[position] = lit, false_lit
                        watches[lit].append(clause)
                        break
                else:
                    kept.append(clause)
                    value = values[first if first > 0 else -first]
                    if value is None:
                        trail.assign(first, clause)
                    else:
                        conflict = clause
                        kept.extend(watchers[index:])
                        break

            watches[false_lit] = kept
            if conflict is not None:
                trail.qhead = len(literals)
                break

        self._stats['propagations'] += propagations
        return conflict

    def analyze_conflict(self, conflict):
        """
        First-UIP conflict analysis.

        Parameters
        ----------
        conflict: Clause
            clause falsified at the current decision level (> 0)

        Return values
        -------------
        learnt: list of int
            asserting clause; learnt[0] is the negated UIP and, when there
            are other literals, learnt[1] has the highest level among them

        backtrack_level: int
            decision level to backjump to
        """
        trail = self._trail
        current = trail.decision_level
        if current == 0:
            raise ValueError(
                'conflict at decision level 0: the formula is unsatisfiable')

        levels = trail.levels
        seen = set()
        learnt = []
        counter = 0
        index = len(trail.literals) - 1
        clause = conflict

        while True:
            if clause.learnt:
                self._bump_clause(clause)

            for lit in clause.literals:
                var = abs(lit)
                if var in seen or levels[var] == 0:
                    continue
                seen.add(var)
                self._bump_var(var)
                if levels[var] >= current:
                    counter += 1
                else:
                    learnt.append(lit)

            while abs(trail.literals[index]) not in seen:
                index -= 1
            pivot = trail.literals[index]
            index -= 1
            counter -= 1
            if counter == 0:
                break
            clause = trail.reasons[abs(pivot)]

        learnt.insert(0, -pivot)

        if len(learnt) == 1:
            return learnt, 0

        highest = max(range(1, len(learnt)),
                      key=lambda position: levels[abs(learnt[position])])
        learnt[1], learnt[highest] = learnt[highest], learnt[1]

        return learnt, levels[abs(learnt[1])]

    def select_decision(self):
        """
        Next decision literal, or None if every variable is assigned.
        """
        values = self._trail.values

        if self._config.random_var_freq > 0 and \
                self._rng.random() < self._config.random_var_freq:
            free = [var for var in range(1, self._num_vars + 1)
                    if values[var] is None]
            if free:
                return self._polarize(
                    free[int(self._rng.integers(len(free)))])

        heap = self._heap
        activity = self._activity
        while heap:
            neg_activity, var = heapq.heappop(heap)
            if values[var] is None and -neg_activity == activity[var]:
                return self._polarize(var)

        return None

    def restart_and_reduce(self):
        """
        Restart when the geometric schedule is due and reduce the learnt
        clause database when it outgrows its limit.
        """
        config = self._config
        if config.restarts and \
                self._conflicts_since_restart >= self._restart_limit:
            self._backtrack(0)
            self._conflicts_since_restart = 0
            self._restart_limit *= config.restart_factor
            self._force_positive = True
            self._stats['restarts'] += 1
            _LOGGER.debug('restart %d, next after %.0f conflicts',
                          self._stats['restarts'], self._restart_limit)

        if len(self._db.learnts) >= self._max_learnts:
            self.reduce_db()
            self._max_learnts *= config.reduce_factor

    def reduce_db(self):
        """
        Delete the less active half of the learnt clauses. Clauses that are
        the reason of a current assignment are kept.
        """
        locked = set(id(reason) for reason in self._trail.reasons
                     if reason is not None)
        ranked = sorted(self._db.learnts, key=lambda clause: clause.activity)
        doomed = [clause for clause in ranked[:len(ranked) // 2]
                  if id(clause) not in locked]
        self._db.remove_learnts(doomed)
        self._stats['reductions'] += 1
        _LOGGER.debug('reduced learnt clauses: %d deleted, %d kept',
                      len(doomed), len(self._db.learnts))

    def solve(self):
        """
        Search for one model of the current clauses.

        Return values
        -------------
        list of int or None: model (one signed literal per variable) or None
        if unsatisfiable
        """
        if self._search():
            return self.model()
        return None

    def model(self):
        """
        Current full assignment as signed literals in variable order.
        """
        values = self._trail.values
        return [var if values[var] else -var
                for var in range(1, self._num_vars + 1)]

    def enumerate(self, on_model=None):
        """
        Enumerate models, blocking each one before searching for the next.

        Parameters
        ----------
        on_model: callable
            called with every model (list of signed literals); returns the
            blocking clauses to add, or None to block the model itself

        Return values
        -------------
        int: number of models found

        Exceptions
        ----------
        ResourceLimitError
            more than config.max_models models exist or config.max_conflicts
            is exceeded
        """
        max_models = self._config.max_models
        count = 0

        while self._search():
            if max_models is not None and count >= max_models:
                raise ResourceLimitError(
                    'more than {} models'.format(max_models),
                    model_count=count)

            model = self.model()
            count += 1
            self._stats['models'] += 1

            clauses = on_model(model) if on_model is not None else None
            if clauses is None:
                clauses = [block_model(model)]
            else:
                clauses = [tuple(clause) for clause in clauses]
            if not clauses:
                raise ValueError("'on_model' returned no blocking clause")

            _LOGGER.debug('model %d: adding %d blocking clauses', count,
                          len(clauses))
            for clause in clauses:
                self.add_clause(clause, blocking=True)

        _LOGGER.info('enumeration finished: %d models, %d conflicts',
                     count, self._stats['conflicts'])

        return count

    # --- Private methods

    def _search(self):
        if not self._ok:
            return False

        trail = self._trail
        max_conflicts = self._config.max_conflicts

        while True:
            conflict = self.unit_propagate()
            if conflict is not None:
                self._stats['conflicts'] += 1
                self._conflicts_since_restart += 1
                if max_conflicts is not None and \
                        self._stats['conflicts'] > max_conflicts:
                    raise ResourceLimitError(
                        'more than {} conflicts'.format(max_conflicts),
                        model_count=self._stats['models'])

                if trail.decision_level == 0:
                    self._ok = False
                    return False

                learnt, backtrack_level = self.analyze_conflict(conflict)
                self._backtrack(backtrack_level)
                self._learn(learnt)
                self._var_inc /= self._config.var_decay
                self._clause_inc /= self._config.clause_decay
                continue

            self.restart_and_reduce()
            lit = self.select_decision()
            if lit is None:
                return True

            trail.new_decision_level()
            trail.assign(lit)
            self._stats['decisions'] += 1

    def _learn(self, learnt):
        if self._config.record_learnts:
            self._learnt_history.append(tuple(learnt))

        if len(learnt) == 1:
            self._trail.assign(learnt[0])
            return

        clause = Clause(learnt, learnt=True)
        self._db.attach(clause)
        self._bump_clause(clause)
        self._trail.assign(learnt[0], clause)

    def _backtrack(self, level):
        activity = self._activity
        for lit in self._trail.backtrack(level):
            var = abs(lit)
            self._saved_phase[var] = lit > 0
            heapq.heappush(self._heap, (-activity[var], var))

        if len(self._heap) > 4 * self._num_vars + 64:
            self._rebuild_heap()

    def _polarize(self, var):
        if self._force_positive:
            self._force_positive = False
            return var

        phase = self._config.phase
        if phase == 'positive':
            return var
        if phase == 'negative':
            return -var
        return var if self._saved_phase[var] else -var

    def _bump_var(self, var):
        activity = self._activity
        activity[var] += self._var_inc
        if activity[var] > _VAR_RESCALE_LIMIT:
            for other in range(1, self._num_vars + 1):
                activity[other] /= _VAR_RESCALE_LIMIT
            self._var_inc /= _VAR_RESCALE_LIMIT
            self._rebuild_heap()
        elif self._trail.values[var] is None:
            heapq.heappush(self._heap, (-activity[var], var))

    def _bump_clause(self, clause):
        clause.activity += self._clause_inc
        if clause.activity > _CLAUSE_RESCALE_LIMIT:
            for learnt in self._db.learnts:
                learnt.activity /= _CLAUSE_RESCALE_LIMIT
            self._clause_inc /= _CLAUSE_RESCALE_LIMIT

    def _rebuild_heap(self):
        values = self._trail.values
        activity = self._activity
        self._heap = [(-activity[var], var)
                      for var in range(1, self._num_vars + 1)
                      if values[var] is None]
        heapq.heapify(self._heap)


# --- Functions

def block_model(model, variables=None):
    """
    Clause excluding the given assignment, projected on 'variables' when
    given (all variables otherwise).

    Examples
    --------
    >>> block_model([1, -2, 3])
    (-1, 2, -3)
    >>> block_model([1, -2, 3], variables=[2, 3])
    (2, -3)
    """
    if variables is None:
        return tuple(-lit for lit in model)

    projection = set(variables)
    return tuple(-lit for lit in model if abs(lit) in projection)


def enumerate_models(num_vars, clauses, on_model=None, config=None):
    """
    Enumerate the models of a formula with a fresh CdclSolver.

    Return values
    -------------
    solver: CdclSolver
        solver after enumeration, for statistics

    count: int
        number of models found
    """
    solver = CdclSolver(num_vars, clauses, config)
    count = solver.enumerate(on_model)
    return solver, count
