"""
Frequent gradual pattern mining by model enumeration.

The pipeline encodes the dataset for chain length k, enumerates the models
of the formula, decodes every model into a pattern and a placement chain,
blocks the pattern (and its complement) and recomputes the exact support of
every pattern with the longest-chain oracle.

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
import logging
import time

# GradSAT
from ..dataset import GradualPattern, NumericalDataset
from ..encoder import GradualEncoder, SymmetryMode, threshold_to_k
from ..errors import (ChainLimitError, EncodingConsistencyError,
                      ResourceLimitError)
from ..precedence import build_relation, closure, longest_chain
from ..solver import CdclSolver, block_model
from .MiningOptions import MiningOptions
from .MiningResult import MiningResult


# --- Constants

_LOGGER = logging.getLogger(__name__)


# --- Class definition

class GradualMiner:
    """
    Mining pipeline for one dataset, with the statistics of the last run.
    """
    # --- Properties

    @property
    def dataset(self):
        """
        NumericalDataset: dataset being mined
        """
        return self._dataset

    @property
    def options(self):
        """
        MiningOptions: mining options
        """
        return self._options

    @property
    def instance(self):
        """
        CnfInstance: formula of the last run (None before the first run)
        """
        return self._instance

    @property
    def statistics(self):
        """
        dict: counters of the last run (k, variables, clauses, models,
        conflicts, restarts, decisions, encode_seconds, solve_seconds)
        """
        return dict(self._statistics)

    # --- Public methods

    def __init__(self, dataset, options=None):
        """
        Initialize GradualMiner object.

        Parameters
        ----------
        dataset: NumericalDataset
            dataset to mine

        options: MiningOptions
            mining options; defaults to MiningOptions()
        """
        # --- Check arguments

        if not isinstance(dataset, NumericalDataset):
            raise ValueError("'dataset' is not a NumericalDataset")

        if options is None:
            options = MiningOptions()

        if not isinstance(options, MiningOptions):
            raise ValueError("'options' is not a MiningOptions object")

        # --- Set property and attribute values

        self._dataset = dataset
        self._options = options
        self._instance = None
        self._encode_seconds = 0.0
        self._statistics = {}
        self._results = []
        self._found = set()

    def mine(self, min_supp):
        """
        Every frequent pattern of length >= min_len, exactly once.

        Parameters
        ----------
        min_supp: int, float or Fraction
            absolute (int) or fractional support threshold

        Return values
        -------------
        list of MiningResult sorted by descending support, then pattern

        Exceptions
        ----------
        InfeasibleThresholdError
            the threshold exceeds n or min_len exceeds m

        ResourceLimitError
            a solver cap was hit; 'partial_results' holds the patterns
            found so far
        """
        k = threshold_to_k(min_supp, self._dataset.num_transactions)
        return self.mine_k(k)

    def mine_k(self, k):
        """
        Every pattern with a chain of at least k transactions.
        """
        self.encode(k)
        return self.enumerate_patterns()

    def encode(self, k):
        """
        Build and keep the CnfInstance for chain length k.
        """
        start = time.perf_counter()
        self._instance = GradualEncoder(self._dataset, k,
                                        self._options.encoding).build()
        self._encode_seconds = time.perf_counter() - start
        return self._instance

    def enumerate_patterns(self):
        """
        Enumerate the patterns of the instance built by encode().
        """
        if self._instance is None:
            raise RuntimeError('encode() has not been called')

        k = self._instance.k
        self._results = []
        self._found = set()
        solver = CdclSolver.from_instance(self._instance,
                                          self._options.solver)

        start = time.perf_counter()
        try:
            solver.enumerate(self._on_model)
        except ResourceLimitError as error:
            self._record_statistics(solver, time.perf_counter() - start)
            raise ResourceLimitError(
                str(error), model_count=error.model_count,
                partial_results=sorted(self._results,
                                       key=MiningResult.sort_key)) \
                from error
        self._record_statistics(solver, time.perf_counter() - start)

        results = self._results
        if self._options.closed:
            results = [result for result in self.closed_filter(results)
                       if result.closed is not False]

        _LOGGER.info('mined k=%d: %d patterns from %d models, '
                     '%d conflicts', k, len(results),
                     self._statistics['models'],
                     self._statistics['conflicts'])

        return sorted(results, key=MiningResult.sort_key)

    def decode_model(self, model):
        """
        Decode a model of the last instance into (pattern, placement),
        validating the placement against the induced order.
        """
        return decode_model(model, self._instance.var_map,
                            dataset=self._dataset,
                            temporal=self._options.encoding.temporal)

    def blocking_clauses_for(self, pattern):
        """
        Blocking clauses of 'pattern' for the current symmetry mode.
        """
        encoding = self._options.encoding
        with_complement = encoding.symmetry is SymmetryMode.BLOCKING and \
            not encoding.temporal
        return blocking_clauses_for(pattern, self._instance.var_map,
                                    with_complement=with_complement)

    def closed_filter(self, results):
        """
        Flag every result as closed (f(g(p)) = p) or not; results whose
        maximal chains exceed the chain limit get closed = None.
        """
        flagged = []
        for result in results:
            try:
                items = closure(self._dataset, result.pattern,
                                temporal=self._options.encoding.temporal,
                                limit=self._options.chain_limit)
                closed = items == frozenset(result.pattern.items)
            except ChainLimitError as error:
                _LOGGER.warning('closedness of %s unknown: %s',
                                result.pattern.format(
                                    self._dataset.attribute_names), error)
                closed = None
            flagged.append(result.with_closed(closed))
        return flagged

    # --- Private methods

    def _on_model(self, model):
        pattern, placement = self.decode_model(model)
        clauses = self.blocking_clauses_for(pattern)

        if not self._options.encoding.temporal and \
                not pattern.is_canonical:
            pattern = pattern.complement()
            placement = tuple(reversed(placement))

        if pattern in self._found:
            raise EncodingConsistencyError(
                '{} decoded twice'.format(pattern.format()))
        self._found.add(pattern)

        self._results.append(self._result(pattern, placement))
        _LOGGER.debug('model %d: %s', len(self._results),
                      pattern.format(self._dataset.attribute_names))

        return clauses

    def _result(self, pattern, placement):
        n = self._dataset.num_transactions
        if not self._options.verify:
            return MiningResult(pattern=pattern,
                                support=Fraction(len(placement), n),
                                witness=placement, model_placement=placement,
                                verified=False)

        chain = longest_chain(build_relation(
            self._dataset, pattern,
            temporal=self._options.encoding.temporal))
        if chain.length < len(placement):
            raise EncodingConsistencyError(
                'support of {} is {} but the model places {} transactions'
                .format(pattern.format(), chain.support, len(placement)))

        return MiningResult(pattern=pattern, support=chain.support,
                            witness=chain.witness, model_placement=placement)

    def _record_statistics(self, solver, solve_seconds):
        stats = solver.stats
        self._statistics = {
            'k': self._instance.k,
            'variables': self._instance.variable_count,
            'clauses': self._instance.num_clauses,
            'models': stats['models'],
            'conflicts': stats['conflicts'],
            'restarts': stats['restarts'],
            'decisions': stats['decisions'],
            'encode_seconds': self._encode_seconds,
            'solve_seconds': solve_seconds,
        }


# --- Functions

def mine(dataset, min_supp, options=None):
    """
    Mine every frequent gradual pattern of 'dataset'.

    See GradualMiner.mine().
    """
    return GradualMiner(dataset, options).mine(min_supp)


def decode_model(model, var_map, dataset=None, temporal=False):
    """
    Extract the pattern and the placement chain of a model.

    Parameters
    ----------
    model: sequence of int
        full assignment as signed literals

    var_map: VarMap
        numbering of the instance the model satisfies

    dataset: NumericalDataset
        when given, the placement is checked against the induced order

    temporal: bool
        check against the temporal order

    Return values
    -------------
    pattern: GradualPattern
        items whose variable is true

    placement: tuple of int
        transaction index at every position 1..k

    Exceptions
    ----------
    EncodingConsistencyError
        no item is selected, a position is not filled by exactly one
        transaction, or the placement is not a chain of the pattern
    """
    true_vars = set(lit for lit in model if lit > 0)

    items = tuple(item for item in var_map.items
                  if var_map.item_var(item) in true_vars)
    if not items:
        raise EncodingConsistencyError('model selects no gradual item')
    try:
        pattern = GradualPattern(items)
    except ValueError as error:
        raise EncodingConsistencyError(str(error)) from error

    placement = []
    for j in range(1, var_map.k + 1):
        rows = [i for i in range(var_map.num_transactions)
                if var_map.placement_var(i, j) in true_vars]
        if len(rows) != 1:
            raise EncodingConsistencyError(
                'position {} holds {} transactions'.format(j, len(rows)))
        placement.append(rows[0])
    placement = tuple(placement)

    if dataset is not None:
        relation = build_relation(dataset, pattern, temporal=temporal)
        if not relation.respects(placement):
            raise EncodingConsistencyError(
                'placement {} is not a chain of {}'.format(
                    placement, pattern.format()))

    return pattern, placement


def blocking_clauses_for(pattern, var_map, with_complement=True):
    """
    Clauses excluding every model whose item variables select 'pattern'
    (and, with 'with_complement', its complement).

    Each clause is the negated projection of the model on the item
    variables, so placements of the same pattern are blocked together while
    its super-patterns stay reachable. Every clause spans all 2m item
    variables: a negative literal per item of the pattern and a positive
    literal per item outside it.

    Examples
    --------
    >>> from gradsat.dataset import Variation
    >>> from gradsat.encoder import VarMap
    >>> vm = VarMap(3, 8, 5)
    >>> p = GradualPattern.of((0, Variation.INC), (2, Variation.DEC))
    >>> blocking_clauses_for(p, vm)
    [(-1, 2, 3, 4, 5, -6), (1, -2, 3, 4, -5, 6)]
    """
    patterns = [pattern]
    if with_complement:
        patterns.append(pattern.complement())

    clauses = []
    for blocked in patterns:
        chosen = set(var_map.item_var(item) for item in blocked)
        projection = [var if var in chosen else -var
                      for var in map(var_map.item_var, var_map.items)]
        clauses.append(block_model(projection))
    return clauses
