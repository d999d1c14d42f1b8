"""
Options of the mining pipeline.

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
from dataclasses import dataclass, field
from typing import Optional

# GradSAT
from ..encoder import EncodingOptions
from ..precedence.chains import DEFAULT_CHAIN_LIMIT
from ..solver import SolverConfig


# --- Class definition

@dataclass(frozen=True)
class MiningOptions:
    """
    Encoding options, solver configuration and post-processing switches.

    Attributes
    ----------
    encoding: EncodingOptions
        CNF encoding options

    solver: SolverConfig
        CDCL solver configuration

    closed: bool
        keep only closed patterns

    verify: bool
        recompute the exact support of every pattern with the chain oracle

    chain_limit: int or None
        maximal-chain cap of the closedness check
    """
    encoding: EncodingOptions = field(default_factory=EncodingOptions)
    solver: SolverConfig = field(default_factory=SolverConfig)
    closed: bool = False
    verify: bool = True
    chain_limit: Optional[int] = DEFAULT_CHAIN_LIMIT

    def __post_init__(self):
        # --- Check arguments

        if not isinstance(self.encoding, EncodingOptions):
            raise ValueError("'encoding' is not an EncodingOptions object")

        if not isinstance(self.solver, SolverConfig):
            raise ValueError("'solver' is not a SolverConfig object")

        if self.chain_limit is not None and self.chain_limit < 1:
            raise ValueError("'chain_limit' is not a positive integer")
