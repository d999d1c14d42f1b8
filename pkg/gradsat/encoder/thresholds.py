"""
Conversion of a minimum support threshold into a chain length k.

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""
# --- Imports

# Standard library
from fractions import Fraction
import logging
import math
import numbers

# GradSAT
from ..errors import InfeasibleThresholdError


# --- Constants

_LOGGER = logging.getLogger(__name__)

MIN_K = 2


# --- Functions

def parse_threshold(text):
    """
    Parse a command-line threshold: values containing '.' or '/' are
    fractions of n, other values are absolute transaction counts.

    Examples
    --------
    >>> parse_threshold('0.625')
    Fraction(5, 8)
    >>> parse_threshold('5')
    5
    """
    text = text.strip()
    try:
        if '.' in text or '/' in text:
            return Fraction(text)
        return int(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError("'{}' is not a support threshold".format(text))


def threshold_to_k(min_supp, n):
    """
    Minimum chain length k certifying support >= min_supp.

    Parameters
    ----------
    min_supp: int, float or Fraction
        integers are absolute transaction counts (1 <= min_supp <= n);
        floats and Fractions are fractions of n (0 < min_supp <= 1)

    n: int
        number of transactions

    Return values
    -------------
    k: int
        ceil(min_supp * n) for fractions, min_supp for counts, raised to 2
        when smaller (every pattern has a chain of length 1)

    Examples
    --------
    >>> threshold_to_k(Fraction(5, 8), 8)
    5
    >>> threshold_to_k(0.3, 8)
    3
    """
    # --- Check arguments

    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 1:
        raise ValueError("'n' is not a positive integer")

    if isinstance(min_supp, bool) or \
            not isinstance(min_supp, numbers.Real):
        raise ValueError("'min_supp' is not a number")

    # --- Compute k

    if isinstance(min_supp, numbers.Integral):
        if min_supp < 1:
            raise ValueError("'min_supp' is not a positive integer")
        k = int(min_supp)
    else:
        if isinstance(min_supp, float):
            if not math.isfinite(min_supp):
                raise ValueError("'min_supp' is not in (0, 1]")
            fraction = Fraction(str(float(min_supp)))
        else:
            fraction = Fraction(min_supp)

        if not 0 < fraction <= 1:
            raise ValueError("'min_supp' is not in (0, 1]")
        k = math.ceil(fraction * n)

    if k > n:
        raise InfeasibleThresholdError(
            "'min_supp' requires k = {} > n = {} transactions".format(k, n))

    if k < MIN_K:
        if MIN_K > n:
            raise InfeasibleThresholdError(
                'a chain of {} transactions needs n >= {}'.format(MIN_K,
                                                                  MIN_K))
        _LOGGER.warning('chain length k = %d raised to %d', k, MIN_K)
        k = MIN_K

    return k
