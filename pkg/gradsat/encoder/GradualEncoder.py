"""
CNF encoding of frequent gradual pattern mining.

A model assigns item variables x(a, +/-) describing a pattern and placement
variables y(i, j) describing k distinct transactions, one per position,
such that consecutive positions respect every selected item. A pattern has
a model iff its support is at least k/n.

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
import logging
import time

# External packages
import numpy

# GradSAT
from ..dataset import NumericalDataset, Variation
from ..errors import InfeasibleThresholdError
from . import cardinality
from .CnfInstance import CnfInstance
from .EncodingOptions import EncodingOptions, OrderEncoding, SymmetryMode
from .VarMap import VarMap


# --- Constants

_LOGGER = logging.getLogger(__name__)


# --- Class definition

class GradualEncoder:
    """
    Builder of the CnfInstance for one dataset and chain length k.

    Each encode_*() method allocates the auxiliary variables it needs in the
    current VarMap and returns its clauses; build() starts from a fresh
    VarMap and concatenates all enabled constraint groups.
    """
    # --- Properties

    @property
    def dataset(self):
        """
        NumericalDataset: dataset being encoded
        """
        return self._dataset

    @property
    def k(self):
        """
        int: chain length threshold
        """
        return self._k

    @property
    def options(self):
        """
        EncodingOptions: encoding options
        """
        return self._options

    @property
    def var_map(self):
        """
        VarMap: current variable numbering
        """
        return self._var_map

    # --- Public methods

    def __init__(self, dataset, k, options=None):
        """
        Initialize GradualEncoder object.

        Parameters
        ----------
        dataset: NumericalDataset
            dataset to encode

        k: int
            number of chain positions, 1 <= k <= n

        options: EncodingOptions
            encoding options; defaults to EncodingOptions()
        """
        # --- Check arguments

        if not isinstance(dataset, NumericalDataset):
            raise ValueError("'dataset' is not a NumericalDataset")

        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise ValueError("'k' is not a positive integer")

        if k > dataset.num_transactions:
            raise InfeasibleThresholdError(
                "'k' = {} exceeds n = {}".format(k,
                                                 dataset.num_transactions))

        if options is None:
            options = EncodingOptions()

        if not isinstance(options, EncodingOptions):
            raise ValueError("'options' is not an EncodingOptions object")

        # --- Set property and attribute values

        self._dataset = dataset
        self._k = k
        self._options = options
        self._var_map = self._new_var_map()

        # successor/predecessor sets of every transaction, per gradual item
        self._successors = {}
        self._predecessors = {}
        n = dataset.num_transactions
        off_diagonal = ~numpy.eye(n, dtype=bool)
        for item in self._var_map.items:
            column = dataset.column(item.attribute_index)
            if item.variation is Variation.INC:
                follows = column[:, None] <= column[None, :]
            else:
                follows = column[:, None] >= column[None, :]
            follows &= off_diagonal
            self._successors[item] = [numpy.flatnonzero(row).tolist()
                                      for row in follows]
            self._predecessors[item] = [numpy.flatnonzero(col).tolist()
                                        for col in follows.T]

    def successors(self, item, i):
        """
        Transactions l != i that may follow transaction i under 'item'.
        """
        return self._successors[item][i]

    def predecessors(self, item, i):
        """
        Transactions l != i that may precede transaction i under 'item'.
        """
        return self._predecessors[item][i]

    def encode_attribute_exclusion(self):
        """
        One clause (-x(a, +) | -x(a, -)) per attribute.
        """
        vm = self._var_map
        return [(-vm.item_var(inc), -vm.item_var(dec))
                for inc, dec in zip(vm.items[0::2], vm.items[1::2])]

    def encode_position_filled(self):
        """
        Exactly one transaction per position.
        """
        vm = self._var_map
        clauses = []
        for j in range(1, self._k + 1):
            literals = [vm.placement_var(i, j)
                        for i in range(vm.num_transactions)]
            clauses.extend(cardinality.exactly_one(
                literals, vm.aux_allocator('position {}'.format(j))))
        return clauses

    def encode_transaction_once(self):
        """
        At most one position per transaction.
        """
        vm = self._var_map
        clauses = []
        for i in range(vm.num_transactions):
            literals = [vm.placement_var(i, j)
                        for j in range(1, self._k + 1)]
            clauses.extend(cardinality.at_most(
                literals, 1, vm.aux_allocator('transaction {}'.format(i))))
        return clauses

    def is_infeasible(self, item, i, j):
        """
        True if transaction i cannot sit at position j of a chain respecting
        'item': fewer than j - 1 transactions may precede it or fewer than
        k - j may follow it.
        """
        return len(self._predecessors[item][i]) < j - 1 or \
            len(self._successors[item][i]) < self._k - j

    def encode_order_successor(self, variant=None):
        """
        Consecutive positions respect every selected item.

        For every item a*, transaction i and position j < k:

        * SUCCESSOR: (-x(a*) | -y(i, j) | OR of y(l, j+1) over successors l);
        * FORBIDDEN: (-x(a*) | -y(i, j) | -y(l, j+1)) per non-successor l.

        With the 'simplify' option, infeasible placements get the binary
        clause (-x(a*) | -y(i, j)) instead.

        Parameters
        ----------
        variant: OrderEncoding
            overrides options.order_encoding
        """
        if variant is None:
            variant = self._options.order_encoding

        if not isinstance(variant, OrderEncoding):
            raise ValueError("'variant' is not an OrderEncoding")

        vm = self._var_map
        n = vm.num_transactions
        clauses = []
        for item in vm.items:
            x = vm.item_var(item)
            for i in range(n):
                successors = self._successors[item][i]
                if variant is OrderEncoding.FORBIDDEN:
                    allowed = set(successors)
                    forbidden = [other for other in range(n)
                                 if other != i and other not in allowed]

                for j in range(1, self._k):
                    y = vm.placement_var(i, j)
                    if self._options.simplify and \
                            self.is_infeasible(item, i, j):
                        clauses.append((-x, -y))
                    elif variant is OrderEncoding.SUCCESSOR:
                        clauses.append(
                            (-x, -y) + tuple(vm.placement_var(other, j + 1)
                                             for other in successors))
                    else:
                        clauses.extend(
                            (-x, -y, -vm.placement_var(other, j + 1))
                            for other in forbidden)
        return clauses

    def encode_min_length(self, min_len=None):
        """
        At least 'min_len' item variables are true.

        Parameters
        ----------
        min_len: int
            overrides options.min_len
        """
        if min_len is None:
            min_len = self._options.min_len

        if isinstance(min_len, bool) or not isinstance(min_len, int) or \
                min_len < 1:
            raise ValueError("'min_len' is not a positive integer")

        vm = self._var_map
        if min_len > vm.num_attributes:
            raise InfeasibleThresholdError(
                "'min_len' = {} exceeds m = {}".format(min_len,
                                                       vm.num_attributes))

        literals = [vm.item_var(item) for item in vm.items]
        return cardinality.at_least(literals, min_len,
                                    vm.aux_allocator('min length'))

    def encode_static_symmetry_break(self):
        """
        Only canonical patterns: x(a, -) requires a lower attribute in the
        pattern, so the lowest selected attribute carries INC.
        """
        vm = self._var_map
        items = vm.items
        clauses = []
        for a in range(vm.num_attributes):
            lower = tuple(vm.item_var(item) for item in items[:2 * a])
            clauses.append((-vm.item_var(items[2 * a + 1]),) + lower)
        return clauses

    def encode_temporal(self):
        """
        Strictly increasing row order along the chain: for consecutive
        positions, (-y(i, j) | -y(i', j+1)) for every i' <= i.
        """
        vm = self._var_map
        clauses = []
        for j in range(1, self._k):
            for i in range(vm.num_transactions):
                y = vm.placement_var(i, j)
                clauses.extend((-y, -vm.placement_var(earlier, j + 1))
                               for earlier in range(i + 1))
        return clauses

    def build(self):
        """
        Build the CnfInstance with all constraint groups enabled by the
        options, on a fresh VarMap.

        Return values
        -------------
        CnfInstance
        """
        # --- Check arguments

        if self._k < 2:
            raise ValueError("'k' is smaller than 2")

        # --- Encode

        start = time.perf_counter()
        self._var_map = self._new_var_map()

        clauses = []
        clauses.extend(self.encode_attribute_exclusion())
        clauses.extend(self.encode_position_filled())
        clauses.extend(self.encode_transaction_once())
        clauses.extend(self.encode_order_successor())
        clauses.extend(self.encode_min_length())
        if self._options.symmetry is SymmetryMode.STATIC:
            clauses.extend(self.encode_static_symmetry_break())
        if self._options.temporal:
            clauses.extend(self.encode_temporal())

        elapsed = time.perf_counter() - start
        instance = CnfInstance(clauses, self._var_map, self._k,
                               options=self._options, encoding_time=elapsed)

        _LOGGER.info('encoded k=%d: %d variables, %d clauses in %.3fs',
                     self._k, instance.variable_count, instance.num_clauses,
                     elapsed)

        return instance

    # --- Private methods

    def _new_var_map(self):
        return VarMap(self._dataset.num_attributes,
                      self._dataset.num_transactions, self._k)


# --- Functions

def build_instance(dataset, k, options=None):
    """
    Build the CnfInstance of 'dataset' for chain length k (2 <= k <= n).
    """
    return GradualEncoder(dataset, k, options).build()


def predicted_size(n, m, k, options=None):
    """
    Closed-form (variable count, clause count) of build_instance() for a
    dataset with n transactions and m attributes.

    The clause count does not depend on the data for the SUCCESSOR
    variant (one order clause per item, transaction and position below k);
    for the FORBIDDEN variant it is data dependent and None is returned.

    Examples
    --------
    >>> predicted_size(8, 3, 5)
    (133, 429)
    """
    if options is None:
        options = EncodingOptions()

    amo_n_aux, amo_n_clauses = cardinality.at_most_size(n, 1)
    amo_k_aux, amo_k_clauses = cardinality.at_most_size(k, 1)
    len_aux, len_clauses = cardinality.at_least_size(2 * m, options.min_len)

    variables = 2 * m + n * k + k * amo_n_aux + n * amo_k_aux + len_aux

    if options.order_encoding is OrderEncoding.FORBIDDEN:
        return variables, None

    clauses = m + k * (1 + amo_n_clauses) + n * amo_k_clauses \
        + 2 * m * n * (k - 1) + len_clauses
    if options.symmetry is SymmetryMode.STATIC:
        clauses += m
    if options.temporal:
        clauses += (k - 1) * n * (n + 1) // 2

    return variables, clauses
