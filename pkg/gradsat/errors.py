"""
Exception types raised by the GradSAT package.

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""


# --- Input errors

class DatasetFormatError(ValueError):
    """
    Malformed CSV input. 'line_number' is 1-based (the header is line 1).
    """
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super().__init__(message)
        self.line_number = line_number


class DimacsFormatError(ValueError):
    """
    Malformed DIMACS CNF input.
    """
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super().__init__(message)
        self.line_number = line_number


class InfeasibleThresholdError(ValueError):
    """
    The requested support threshold or pattern length cannot be met by any
    pattern of the dataset (k > n, min_len > m).
    """


# --- Runtime errors

class EncodingConsistencyError(RuntimeError):
    """
    A model of the CNF instance does not decode into a valid pattern and
    chain. Signals a defect in the encoder.
    """


class ChainLimitError(RuntimeError):
    """
    Enumeration of maximal chains produced more sequences than allowed.
    """
    def __init__(self, limit):
        super().__init__(
            'more than {} maximal chains; enumeration aborted'.format(limit))
        self.limit = limit


class ResourceLimitError(RuntimeError):
    """
    Model enumeration stopped on a 'max_models' or 'max_conflicts' cap.

    Attributes
    ----------
    model_count: int
        number of models reported before the cap was hit

    partial_results: list
        results collected before the cap was hit (set by the miner)
    """
    def __init__(self, message, model_count=0, partial_results=None):
        super().__init__(message)
        self.model_count = model_count
        self.partial_results = list(partial_results or [])
