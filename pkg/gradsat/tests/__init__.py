"""
Unit tests for PyGradSAT package, with shared fixtures.

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
import itertools

# GradSAT
from gradsat.dataset import GradualPattern, NumericalDataset, Variation
from gradsat.precedence import support


# --- Constants

TABLE1_CSV = """id,p,s,r
t1,4,3,13
t2,6,9,11
t3,8,1,9
t4,13,7,5
t5,4,5,10
t6,9,6,8
t7,10,6,12
t8,13,7,13
"""


# --- Fixtures

def table1():
    """
    Eight-transaction pollen dataset with attributes p, s and r.
    """
    return NumericalDataset(['p', 's', 'r'],
                            [[4, 3, 13], [6, 9, 11], [8, 1, 9], [13, 7, 5],
                             [4, 5, 10], [9, 6, 8], [10, 6, 12],
                             [13, 7, 13]])


def random_dataset(rng, n, m, high=9):
    """
    Dataset of n transactions and m attributes with integer values in
    [0, high].
    """
    values = rng.integers(0, high + 1, size=(n, m))
    return NumericalDataset(['a{}'.format(a) for a in range(m)], values)


def canonical_patterns(num_attributes, min_len=2):
    """
    Every canonical pattern of length >= min_len.
    """
    for length in range(min_len, num_attributes + 1):
        for attributes in itertools.combinations(range(num_attributes),
                                                 length):
            for rest in itertools.product(Variation,
                                          repeat=length - 1):
                variations = (Variation.INC,) + rest
                yield GradualPattern.of(*zip(attributes, variations))


def brute_force(dataset, k, min_len=2, temporal=False):
    """
    Reference miner: {pattern: support} of every pattern with a chain of
    at least k transactions.

    Without 'temporal' only canonical patterns are listed; with it both
    members of each complement pair are.
    """
    patterns = list(canonical_patterns(dataset.num_attributes, min_len))
    if temporal:
        patterns += [pattern.complement() for pattern in patterns]

    frequent = {}
    for pattern in patterns:
        value = support(dataset, pattern, temporal=temporal)
        if value * dataset.num_transactions >= k:
            frequent[pattern] = value
    return frequent


def random_pattern(rng, num_attributes):
    """
    Pattern over a random non-empty attribute subset with random variations.
    """
    length = int(rng.integers(1, num_attributes + 1))
    attributes = rng.choice(num_attributes, size=length, replace=False)
    return GradualPattern.of(*((int(attribute),
                                list(Variation)[int(rng.integers(2))])
                               for attribute in attributes))


def sub_patterns(pattern, min_len=1):
    """
    Every pattern made of a proper subset of the items of 'pattern' with at
    least min_len items.
    """
    for length in range(min_len, len(pattern)):
        for items in itertools.combinations(pattern.items, length):
            yield GradualPattern(items)
