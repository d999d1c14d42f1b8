"""
Gradual items: an attribute paired with a direction of variation.

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
from dataclasses import dataclass
import enum
import functools


# --- Class definitions

@functools.total_ordering
class Variation(enum.Enum):
    """
    Direction of variation of a gradual item.

    INC ("+") requires non-decreasing values along an ordered sequence of
    transactions, DEC ("-") non-increasing values.
    """
    INC = '+'
    DEC = '-'

    @property
    def symbol(self):
        """
        str: '+' or '-'
        """
        return self.value

    def flipped(self):
        """
        Return the opposite variation.
        """
        return Variation.DEC if self is Variation.INC else Variation.INC

    def precedes(self, lhs, rhs):
        """
        Return True if a value 'lhs' may precede a value 'rhs' under this
        variation (non-strict comparison).
        """
        if self is Variation.INC:
            return lhs <= rhs
        return lhs >= rhs

    def __lt__(self, other):
        # INC sorts before DEC
        return self is Variation.INC and other is Variation.DEC


@dataclass(frozen=True, order=True)
class GradualItem:
    """
    Attribute index together with a Variation.

    Examples
    --------
    >>> GradualItem(2, Variation.DEC).format(['p', 's', 'r'])
    'r-'
    """
    attribute_index: int
    variation: Variation

    def __post_init__(self):
        # --- Check arguments

        if isinstance(self.attribute_index, bool) or \
                not isinstance(self.attribute_index, int):
            raise ValueError("'attribute_index' is not an integer")

        if self.attribute_index < 0:
            raise ValueError("'attribute_index' is negative")

        if not isinstance(self.variation, Variation):
            raise ValueError("'variation' is not a Variation")

    def complement(self):
        """
        Return the item on the same attribute with the opposite variation.
        """
        return GradualItem(self.attribute_index, self.variation.flipped())

    def format(self, attribute_names=None):
        """
        Render the item as '<name><sign>', e.g. 'p+'.

        Parameters
        ----------
        attribute_names: sequence of str
            names of the attributes; when omitted, 'a<index>' is used
        """
        if attribute_names is None:
            name = 'a{}'.format(self.attribute_index)
        else:
            name = attribute_names[self.attribute_index]
        return name + self.variation.symbol
