"""
Validated settings of one command-line run.

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""
# pylint: disable=invalid-name,too-many-instance-attributes

# --- Imports

# Standard library
from dataclasses import dataclass
from fractions import Fraction
import numbers
from typing import Optional, Union

# GradSAT
from ..encoder import EncodingOptions, OrderEncoding, SymmetryMode
from ..encoder.EncodingOptions import DEFAULT_MIN_LEN
from ..miner import MiningOptions
from ..miner.report import REPORT_FORMATS
from ..solver import SolverConfig


# --- Class definition

@dataclass(frozen=True)
class RunConfig:
    """
    Everything a 'gradsat' invocation needs.

    Attributes
    ----------
    input_path: str
        CSV dataset

    min_supp: int or Fraction
        absolute count or fraction of the transactions
    """
    input_path: str
    min_supp: Union[int, Fraction]
    min_len: int = DEFAULT_MIN_LEN
    order_encoding: OrderEncoding = OrderEncoding.SUCCESSOR
    symmetry: SymmetryMode = SymmetryMode.BLOCKING
    closed: bool = False
    temporal: bool = False
    simplify: bool = True
    export_dimacs: Optional[str] = None
    encode_only: bool = False
    verify: bool = True
    max_models: Optional[int] = None
    max_conflicts: Optional[int] = None
    seed: int = 0
    output_format: str = 'json'
    id_column: bool = False

    def __post_init__(self):
        # --- Check arguments

        if isinstance(self.min_supp, bool) or \
                not isinstance(self.min_supp, numbers.Rational):
            raise ValueError("'min_supp' is not an integer or a fraction")

        if isinstance(self.min_supp, numbers.Integral):
            if self.min_supp < 1:
                raise ValueError("'min_supp' is not a positive integer")
        elif not 0 < self.min_supp <= 1:
            raise ValueError("'min_supp' is not in (0, 1]")

        if self.output_format not in REPORT_FORMATS:
            raise ValueError("'output_format' is not one of {}".format(
                ', '.join(REPORT_FORMATS)))

        if self.encode_only and self.export_dimacs is None:
            raise ValueError("'encode_only' requires 'export_dimacs'")

        # option objects validate the remaining fields
        self.mining_options()

    def encoding_options(self):
        """
        EncodingOptions of the run.
        """
        return EncodingOptions(order_encoding=self.order_encoding,
                               symmetry=self.symmetry,
                               min_len=self.min_len,
                               temporal=self.temporal,
                               simplify=self.simplify)

    def solver_config(self):
        """
        SolverConfig of the run.
        """
        return SolverConfig(seed=self.seed, max_models=self.max_models,
                            max_conflicts=self.max_conflicts)

    def mining_options(self):
        """
        MiningOptions of the run.
        """
        return MiningOptions(encoding=self.encoding_options(),
                             solver=self.solver_config(),
                             closed=self.closed, verify=self.verify)

    def header(self):
        """
        One line echoing the effective options.

        Examples
        --------
        >>> RunConfig('table1.csv', Fraction(5, 8)).header().split()[:3]
        ['min_supp=5/8', 'min_len=2', 'encoding=successor']
        """
        return ' '.join([
            'min_supp={}'.format(self.min_supp),
            'min_len={}'.format(self.min_len),
            'encoding={}'.format(self.order_encoding.value),
            'symmetry={}'.format(self.symmetry.value),
            'closed={}'.format(self.closed),
            'temporal={}'.format(self.temporal),
            'simplify={}'.format(self.simplify),
            'verify={}'.format(self.verify),
            'seed={}'.format(self.seed),
        ])
