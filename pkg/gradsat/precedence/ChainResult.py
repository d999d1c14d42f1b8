"""
Longest ordered chain of transactions and the support it certifies.

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
from fractions import Fraction
from typing import Tuple


# --- Class definition

@dataclass(frozen=True)
class ChainResult:
    """
    Maximum chain length, the support length / n, and one witness chain.
    """
    length: int
    support: Fraction
    witness: Tuple[int, ...]

    def __post_init__(self):
        # --- Check arguments

        if self.length < 1:
            raise ValueError("'length' is not a positive integer")

        if len(self.witness) != self.length:
            raise ValueError("'witness' does not have 'length' elements")

        if len(set(self.witness)) != len(self.witness):
            raise ValueError("'witness' repeats a transaction")

        if not 0 < self.support <= 1:
            raise ValueError("'support' is not in (0, 1]")
