"""
Gradual patterns (gradual itemsets) and their complement/canonical forms.

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
from typing import Tuple

# GradSAT
from .GradualItem import GradualItem, Variation


# --- Class definition

@dataclass(frozen=True)
class GradualPattern:
    """
    Non-empty set of gradual items over pairwise distinct attributes.

    Items are stored sorted by attribute index, so two patterns holding the
    same items compare and hash equal regardless of construction order.

    Examples
    --------
    >>> p = GradualPattern.of((0, Variation.INC), (2, Variation.DEC))
    >>> p.format(['p', 's', 'r'])
    '(p+, r-)'
    >>> p.complement().format(['p', 's', 'r'])
    '(p-, r+)'
    >>> p.complement().canonical_form() == p
    True
    """
    items: Tuple[GradualItem, ...]

    def __post_init__(self):
        # --- Check arguments

        items = tuple(self.items)
        if not items:
            raise ValueError("'items' is empty")

        for item in items:
            if not isinstance(item, GradualItem):
                raise ValueError("'items' contains a non-GradualItem value")

        attributes = [item.attribute_index for item in items]
        if len(set(attributes)) != len(attributes):
            raise ValueError("'items' uses an attribute more than once")

        # --- Set canonical storage order

        object.__setattr__(self, 'items', tuple(sorted(items)))

    # --- Construction helpers

    @classmethod
    def of(cls, *pairs):
        """
        Build a pattern from (attribute_index, Variation) pairs.
        """
        return cls(tuple(GradualItem(index, variation)
                         for index, variation in pairs))

    # --- Properties

    @property
    def attributes(self):
        """
        tuple: attribute indices of the pattern, ascending
        """
        return tuple(item.attribute_index for item in self.items)

    @property
    def is_canonical(self):
        """
        bool: True if the lowest-index item carries the INC variation
        """
        return self.items[0].variation is Variation.INC

    # --- Public methods

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        """
        Lexicographic key: (attribute, INC before DEC) per item.
        """
        return tuple((item.attribute_index, item.variation is Variation.DEC)
                     for item in self.items)

    def complement(self):
        """
        Return the pattern with every variation flipped.
        """
        return GradualPattern(tuple(item.complement() for item in self.items))

    def canonical_form(self):
        """
        Return whichever of {self, complement} has INC on its lowest
        attribute.
        """
        if self.is_canonical:
            return self
        return self.complement()

    def issubset(self, other):
        """
        Return True if every item of this pattern is an item of 'other'.
        """
        return set(self.items) <= set(other.items)

    def format(self, attribute_names=None):
        """
        Render the pattern as '(p+, r-)'.
        """
        return '(' + ', '.join(item.format(attribute_names)
                               for item in self.items) + ')'


# --- Functions

def complement(pattern):
    """
    Complementary gradual pattern: same attributes, variations flipped.
    """
    return pattern.complement()


def canonical_form(pattern):
    """
    Canonical representative of {pattern, complement(pattern)}.
    """
    return pattern.canonical_form()


def parse_pattern(text, attribute_names):
    """
    Parse a pattern written as whitespace- or comma-separated items such as
    'p+ r-' (the last character of each item is the variation sign).

    Parameters
    ----------
    text: str
        pattern text

    attribute_names: sequence of str
        attribute names used to resolve item names to indices

    Examples
    --------
    >>> parse_pattern('p+, r-', ['p', 's', 'r']).attributes
    (0, 2)
    """
    # --- Check arguments

    tokens = text.replace(',', ' ').replace('(', ' ').replace(')', ' ').split()
    if not tokens:
        raise ValueError("'text' contains no gradual items")

    # --- Parse items

    lookup = {name: index for index, name in enumerate(attribute_names)}
    items = []
    for token in tokens:
        name, sign = token[:-1], token[-1]
        if sign not in ('+', '-'):
            raise ValueError(
                "item '{}' does not end with '+' or '-'".format(token))
        if name not in lookup:
            raise ValueError("unknown attribute '{}'".format(name))
        items.append(GradualItem(lookup[name], Variation(sign)))

    return GradualPattern(tuple(items))
