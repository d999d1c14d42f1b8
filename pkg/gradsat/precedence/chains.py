"""
Chain computations on induced orders: exact support (longest chain),
maximal chains and the Galois closure of a pattern.

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
import itertools
import math

# External packages
import networkx

# GradSAT
from ..dataset import GradualItem, Variation
from ..errors import ChainLimitError
from .ChainResult import ChainResult
from .PrecedenceRelation import build_relation


# --- Constants

DEFAULT_CHAIN_LIMIT = 10000


# --- Helper functions

def _condense(relation):
    """
    Return (condensation DAG, sorted members per component).
    """
    condensed = networkx.condensation(relation.graph())
    members = {node: sorted(condensed.nodes[node]['members'])
               for node in condensed.nodes}
    return condensed, members


# --- Functions

def longest_chain(relation):
    """
    Exact maximum chain length of a precedence relation.

    Tied transactions form strongly connected components; the condensation
    is acyclic and the heaviest path, weighting each component by its size,
    is the longest chain. Ties are broken towards the smallest transaction
    index so the witness is deterministic.

    Parameters
    ----------
    relation: PrecedenceRelation
        induced order

    Return values
    -------------
    ChainResult
    """
    condensed, members = _condense(relation)

    def first_member(node):
        return members[node][0]

    best = {}
    parent = {}
    order = networkx.lexicographical_topological_sort(condensed,
                                                      key=first_member)
    for node in order:
        predecessors = sorted(condensed.predecessors(node),
                              key=lambda pred: (-best[pred],
                                                first_member(pred)))
        if predecessors:
            parent[node] = predecessors[0]
            best[node] = best[predecessors[0]] + len(members[node])
        else:
            parent[node] = None
            best[node] = len(members[node])

    end = min(condensed.nodes, key=lambda node: (-best[node],
                                                 first_member(node)))

    components = []
    node = end
    while node is not None:
        components.append(node)
        node = parent[node]

    witness = tuple(index for node in reversed(components)
                    for index in members[node])

    return ChainResult(length=len(witness),
                       support=Fraction(len(witness), relation.n),
                       witness=witness)


def maximal_chains(relation, limit=DEFAULT_CHAIN_LIMIT):
    """
    All chains of the relation that cannot be extended at either end or by
    insertion.

    A maximal chain visits a source-to-sink path of the transitive reduction
    of the condensation and lists every member of each visited component,
    in any order.

    Parameters
    ----------
    relation: PrecedenceRelation
        induced order

    limit: int or None
        maximum number of chains to produce

    Return values
    -------------
    set of tuples of transaction indices

    Raises
    ------
    ChainLimitError
        if more than 'limit' chains exist
    """
    # --- Check arguments

    if limit is not None and limit < 1:
        raise ValueError("'limit' is not a positive integer")

    # --- Enumerate component paths of the Hasse diagram

    condensed, members = _condense(relation)
    hasse = networkx.transitive_reduction(condensed)

    sources = sorted((node for node in hasse.nodes
                      if hasse.in_degree(node) == 0),
                     key=lambda node: members[node][0])
    sinks = sorted((node for node in hasse.nodes
                    if hasse.out_degree(node) == 0),
                   key=lambda node: members[node][0])

    chains = set()
    for source in sources:
        if source in sinks:
            paths = [[source]]
        else:
            paths = itertools.chain.from_iterable(
                networkx.all_simple_paths(hasse, source, sink)
                for sink in sinks)

        for path in paths:
            count = math.prod(math.factorial(len(members[node]))
                              for node in path)
            if limit is not None and len(chains) + count > limit:
                raise ChainLimitError(limit)

            orderings = itertools.product(
                *(itertools.permutations(members[node]) for node in path))
            for ordering in orderings:
                chains.add(tuple(itertools.chain.from_iterable(ordering)))

    return chains


def support(dataset, pattern, temporal=False):
    """
    Exact support of 'pattern' on 'dataset' as a Fraction.

    Examples
    --------
    >>> from gradsat.dataset import NumericalDataset, GradualPattern
    >>> ds = NumericalDataset(['a', 'b'], [[1, 3], [2, 2], [3, 4]])
    >>> support(ds, GradualPattern.of((0, Variation.INC),
    ...                                (1, Variation.DEC)))
    Fraction(2, 3)
    """
    return longest_chain(build_relation(dataset, pattern,
                                        temporal=temporal)).support


def items_along(dataset, chains):
    """
    Return the set of gradual items whose variation holds between every pair
    of consecutive transactions of every chain in 'chains'.
    """
    values = dataset.values
    holding = set()
    for attribute_index in range(dataset.num_attributes):
        for variation in Variation:
            if all(variation.precedes(values[a, attribute_index],
                                      values[b, attribute_index])
                   for chain in chains for a, b in zip(chain, chain[1:])):
                holding.add(GradualItem(attribute_index, variation))

    return frozenset(holding)


def closure(dataset, pattern, temporal=False, limit=DEFAULT_CHAIN_LIMIT):
    """
    Galois closure f(g(pattern)): the items holding along every maximal
    chain of the order induced by 'pattern'.

    The result always contains the items of 'pattern'. It may hold both
    variations of an attribute that is constant along all maximal chains.

    Return values
    -------------
    frozenset of GradualItem
    """
    relation = build_relation(dataset, pattern, temporal=temporal)
    return items_along(dataset, maximal_chains(relation, limit=limit))
