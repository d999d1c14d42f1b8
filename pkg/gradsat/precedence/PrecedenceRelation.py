"""
Order induced on the transactions of a dataset by a gradual pattern.

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

# External packages
import networkx
import numpy

# GradSAT
from ..dataset import GradualPattern, NumericalDataset, Variation


# --- Class definition

class PrecedenceRelation:
    """
    Directed relation t_i <=_p t_j over the transactions of a dataset.

    Edge (i, j), i != j, holds iff every item of the pattern varies in its
    stated direction (non-strict) from t_i to t_j. In temporal mode, edges
    are additionally restricted to i < j (row order). The relation is a
    preorder on transactions (transitive; mutually related transactions tie
    on every pattern attribute).
    """
    # --- Properties

    @property
    def pattern(self):
        """
        GradualPattern: pattern inducing the order
        """
        return self._pattern

    @property
    def edges(self):
        """
        numpy.ndarray: read-only (n, n) boolean adjacency matrix with a
        False diagonal
        """
        return self._edges

    @property
    def n(self):
        """
        int: number of transactions
        """
        return self._edges.shape[0]

    @property
    def temporal(self):
        """
        bool: True if edges are restricted to increasing row order
        """
        return self._temporal

    # --- Public methods

    def __init__(self, pattern, edges, temporal=False):
        """
        Initialize PrecedenceRelation object.

        Parameters
        ----------
        pattern: GradualPattern
            pattern inducing the order

        edges: numpy.ndarray
            square boolean adjacency matrix

        temporal: bool
            whether the edges were restricted to row order
        """
        # --- Check arguments

        if not isinstance(pattern, GradualPattern):
            raise ValueError("'pattern' is not a GradualPattern")

        edges = numpy.array(edges, dtype=bool)
        if edges.ndim != 2 or edges.shape[0] != edges.shape[1]:
            raise ValueError("'edges' is not a square matrix")

        if numpy.any(numpy.diag(edges)):
            raise ValueError("'edges' contains a self-loop")

        # --- Set property and attribute values

        edges.setflags(write=False)
        self._pattern = pattern
        self._edges = edges
        self._temporal = bool(temporal)

    def has_edge(self, i, j):
        """
        Return True if transaction i precedes transaction j.
        """
        return bool(self._edges[i, j])

    def respects(self, chain):
        """
        Return True if 'chain' is a sequence of pairwise distinct
        transactions whose consecutive elements are related.
        """
        chain = list(chain)
        if len(set(chain)) != len(chain):
            return False
        return all(self._edges[a, b] for a, b in zip(chain, chain[1:]))

    def graph(self):
        """
        Return the relation as a networkx.DiGraph on nodes 0..n-1.
        """
        graph = networkx.DiGraph()
        graph.add_nodes_from(range(self.n))
        sources, targets = numpy.nonzero(self._edges)
        graph.add_edges_from(zip(sources.tolist(), targets.tolist()))
        return graph


# --- Functions

def build_relation(dataset, pattern, temporal=False):
    """
    Materialize the order induced by 'pattern' on 'dataset'.

    Parameters
    ----------
    dataset: NumericalDataset
        input relation

    pattern: GradualPattern
        pattern whose items define the order

    temporal: bool
        if True, keep only edges (i, j) with i < j

    Return values
    -------------
    PrecedenceRelation
    """
    # --- Check arguments

    if not isinstance(dataset, NumericalDataset):
        raise ValueError("'dataset' is not a NumericalDataset")

    if not isinstance(pattern, GradualPattern):
        raise ValueError("'pattern' is not a GradualPattern")

    if pattern.attributes[-1] >= dataset.num_attributes:
        raise ValueError("'pattern' uses an attribute not in 'dataset'")

    # --- Intersect the single-item orders

    n = dataset.num_transactions
    edges = ~numpy.eye(n, dtype=bool)
    for item in pattern:
        column = dataset.column(item.attribute_index)
        if item.variation is Variation.INC:
            edges &= column[:, None] <= column[None, :]
        else:
            edges &= column[:, None] >= column[None, :]

    if temporal:
        edges &= numpy.triu(numpy.ones((n, n), dtype=bool), k=1)

    return PrecedenceRelation(pattern, edges, temporal=temporal)
