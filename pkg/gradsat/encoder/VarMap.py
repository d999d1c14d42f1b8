"""
Bidirectional map between SAT variables and their meaning in the mining
problem.

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
from ..dataset import GradualItem, Variation


# --- Class definition

class VarMap:
    """
    Variable numbering of a gradual pattern mining instance.

    Variables are numbered from 1 in three consecutive ranges:

    * item variables x(a, +), x(a, -): 2a + 1 and 2a + 2 for attribute a;
    * placement variables y(i, j) ("transaction i sits at position j",
      0 <= i < n, 1 <= j <= k): 2m + (j - 1) n + i + 1, row-major by
      position;
    * auxiliary variables, allocated by new_aux() in emission order.
    """
    # --- Properties

    @property
    def num_attributes(self):
        """
        int: number of attributes m
        """
        return self._num_attributes

    @property
    def num_transactions(self):
        """
        int: number of transactions n
        """
        return self._num_transactions

    @property
    def k(self):
        """
        int: number of chain positions
        """
        return self._k

    @property
    def variable_count(self):
        """
        int: total number of variables allocated so far
        """
        return self._first_aux - 1 + len(self._aux_labels)

    @property
    def item_vars(self):
        """
        dict: GradualItem -> variable
        """
        return {item: self.item_var(item) for item in self.items}

    @property
    def placement_vars(self):
        """
        dict: (transaction index, position) -> variable
        """
        return {(i, j): self.placement_var(i, j)
                for j in range(1, self._k + 1)
                for i in range(self._num_transactions)}

    @property
    def aux_vars(self):
        """
        list: auxiliary variables in allocation order
        """
        return list(range(self._first_aux,
                          self._first_aux + len(self._aux_labels)))

    @property
    def items(self):
        """
        list: all 2m gradual items in variable order
        """
        return [GradualItem(a, variation)
                for a in range(self._num_attributes)
                for variation in (Variation.INC, Variation.DEC)]

    # --- Public methods

    def __init__(self, num_attributes, num_transactions, k):
        """
        Initialize VarMap object.

        Parameters
        ----------
        num_attributes: int
            number of attributes m

        num_transactions: int
            number of transactions n

        k: int
            number of chain positions
        """
        # --- Check arguments

        for name, value in (('num_attributes', num_attributes),
                            ('num_transactions', num_transactions),
                            ('k', k)):
            if not isinstance(value, int) or value < 1:
                raise ValueError(
                    "'{}' is not a positive integer".format(name))

        # --- Set property and attribute values

        self._num_attributes = num_attributes
        self._num_transactions = num_transactions
        self._k = k
        self._first_aux = 2 * num_attributes + num_transactions * k + 1
        self._aux_labels = []

    def item_var(self, item):
        """
        Variable of a GradualItem.
        """
        if not 0 <= item.attribute_index < self._num_attributes:
            raise ValueError("'item' attribute is out of range")

        offset = 1 if item.variation is Variation.INC else 2
        return 2 * item.attribute_index + offset

    def placement_var(self, i, j):
        """
        Variable y(i, j): transaction i (0-based) at position j (1-based).
        """
        if not 0 <= i < self._num_transactions:
            raise ValueError("'i' is out of range")

        if not 1 <= j <= self._k:
            raise ValueError("'j' is out of range")

        return 2 * self._num_attributes + (j - 1) * self._num_transactions \
            + i + 1

    def new_aux(self, label='aux'):
        """
        Allocate and return a fresh auxiliary variable.
        """
        self._aux_labels.append(label)
        return self.variable_count

    def aux_allocator(self, label):
        """
        Return a zero-argument callable allocating auxiliaries tagged with
        'label' (the 'new_var' argument of the cardinality encodings).
        """
        return lambda: self.new_aux(label)

    def meaning(self, var):
        """
        Meaning of a variable: a GradualItem, an (i, j) placement tuple or
        the label of an auxiliary variable.
        """
        if not 1 <= var <= self.variable_count:
            raise ValueError("'var' is out of range")

        if var <= 2 * self._num_attributes:
            variation = Variation.INC if var % 2 == 1 else Variation.DEC
            return GradualItem((var - 1) // 2, variation)

        if var < self._first_aux:
            offset = var - 2 * self._num_attributes - 1
            return (offset % self._num_transactions,
                    offset // self._num_transactions + 1)

        return self._aux_labels[var - self._first_aux]

    def describe(self, var):
        """
        One-line description used in DIMACS comments, e.g. 'x 1 = attr 0
        INC', 'y 7 = txn 0 pos 1'.
        """
        meaning = self.meaning(var)
        if isinstance(meaning, GradualItem):
            return 'x {} = attr {} {}'.format(var, meaning.attribute_index,
                                              meaning.variation.name)
        if isinstance(meaning, tuple):
            return 'y {} = txn {} pos {}'.format(var, *meaning)
        return 'aux {} = {}'.format(var, meaning)
