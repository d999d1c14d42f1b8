"""
Options of the CNF encoding.

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


# --- Constants

DEFAULT_MIN_LEN = 2


# --- Class definitions

class OrderEncoding(enum.Enum):
    """
    Encoding of the successor constraint between consecutive positions.

    SUCCESSOR: one clause listing the allowed successors of a placement.
    FORBIDDEN: one ternary clause per disallowed successor.
    """
    SUCCESSOR = 'successor'
    FORBIDDEN = 'forbidden'


class SymmetryMode(enum.Enum):
    """
    Handling of complementary patterns.

    BLOCKING: block each pattern and its complement when a model is found.
    STATIC: add clauses admitting only canonical patterns.
    """
    BLOCKING = 'blocking'
    STATIC = 'static'


@dataclass(frozen=True)
class EncodingOptions:
    """
    Options of GradualEncoder.

    Attributes
    ----------
    order_encoding: OrderEncoding
        successor constraint variant

    symmetry: SymmetryMode
        complement handling

    min_len: int
        minimum number of items of a pattern

    temporal: bool
        restrict chains to increasing row order

    simplify: bool
        replace order clauses of infeasible placements by binary clauses
    """
    order_encoding: OrderEncoding = OrderEncoding.SUCCESSOR
    symmetry: SymmetryMode = SymmetryMode.BLOCKING
    min_len: int = DEFAULT_MIN_LEN
    temporal: bool = False
    simplify: bool = True

    def __post_init__(self):
        # --- Check arguments

        if not isinstance(self.order_encoding, OrderEncoding):
            raise ValueError("'order_encoding' is not an OrderEncoding")

        if not isinstance(self.symmetry, SymmetryMode):
            raise ValueError("'symmetry' is not a SymmetryMode")

        if isinstance(self.min_len, bool) or \
                not isinstance(self.min_len, int) or self.min_len < 1:
            raise ValueError("'min_len' is not a positive integer")

        if self.temporal and self.symmetry is SymmetryMode.STATIC:
            err_msg = "'symmetry' STATIC cannot be combined with 'temporal'"
            raise ValueError(err_msg)
