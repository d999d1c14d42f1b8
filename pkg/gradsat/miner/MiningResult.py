"""
One frequent gradual pattern found by the miner.

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
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

# GradSAT
from ..dataset import GradualPattern


# --- Class definition

@dataclass(frozen=True)
class MiningResult:
    """
    Attributes
    ----------
    pattern: GradualPattern
        mined pattern; canonical except in temporal mode

    support: Fraction
        exact support from the chain oracle, or k/n when not verified

    witness: tuple of int
        one maximum chain of transaction indices

    model_placement: tuple of int
        the k-position chain decoded from the solver model

    closed: bool or None
        closedness flag; None when not evaluated or unknown

    verified: bool
        True if 'support' and 'witness' come from the chain oracle
    """
    pattern: GradualPattern
    support: Fraction
    witness: Tuple[int, ...]
    model_placement: Tuple[int, ...]
    closed: Optional[bool] = None
    verified: bool = True

    def __post_init__(self):
        # --- Check arguments

        if not isinstance(self.pattern, GradualPattern):
            raise ValueError("'pattern' is not a GradualPattern")

        if not isinstance(self.support, Fraction) or \
                not 0 < self.support <= 1:
            raise ValueError("'support' is not a Fraction in (0, 1]")

        if len(self.witness) < len(self.model_placement):
            raise ValueError("'witness' is shorter than 'model_placement'")

    def sort_key(self):
        """
        Descending support, then pattern order.
        """
        return (-self.support, self.pattern.sort_key())

    def with_closed(self, closed):
        """
        Copy of the result with the given closedness flag.
        """
        return replace(self, closed=closed)
