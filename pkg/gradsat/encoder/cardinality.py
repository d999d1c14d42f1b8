"""
CNF encodings of cardinality constraints with the sequential counter.

Every function receives the constrained literals (DIMACS-style signed
integers) and a zero-argument callable 'new_var' returning a fresh
auxiliary variable, and returns a list of clauses (tuples of literals).

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""


# --- Size formulas

def at_most_size(width, bound):
    """
    Return (auxiliary variable count, clause count) of at_most() over
    'width' literals.

    Examples
    --------
    >>> at_most_size(5, 1)
    (4, 11)
    >>> at_most_size(1, 1)
    (0, 0)
    """
    if bound >= width:
        return 0, 0
    if bound == 0:
        return 0, width
    return (width - 1) * bound, bound + (width - 2) * (2 * bound + 1) + 1


def at_least_size(width, bound):
    """
    Return (auxiliary variable count, clause count) of at_least().
    """
    if bound <= 0:
        return 0, 0
    if bound == 1:
        return 0, 1
    return at_most_size(width, width - bound)


# --- Encodings

def at_most(literals, bound, new_var):
    """
    Sequential-counter encoding of sum(literals) <= bound.

    Registers s[i][j] mean "at least j+1 of the first i+1 literals are
    true"; (width - 1) * bound auxiliary variables are allocated, row by
    row. For bound = 1 the clauses are

        (-x1 | p1) & (-xn | -p(n-1))
        & (-xi | pi) & (-p(i-1) | pi) & (-xi | -p(i-1))   for 1 < i < n

    Examples
    --------
    >>> counter = iter(range(4, 100))
    >>> at_most([1, 2, 3], 1, lambda: next(counter))
    [(-1, 4), (-3, -5), (-2, 5), (-4, 5), (-2, -4)]
    """
    # --- Check arguments

    literals = list(literals)
    if bound < 0:
        raise ValueError("'bound' is negative")

    if len(set(abs(lit) for lit in literals)) != len(literals):
        raise ValueError("'literals' repeats a variable")

    # --- Trivial bounds

    width = len(literals)
    if bound >= width:
        return []

    if bound == 0:
        return [(-lit,) for lit in literals]

    # --- Sequential counter

    registers = [[new_var() for _ in range(bound)] for _ in range(width - 1)]

    first, last = literals[0], literals[-1]
    clauses = [(-first, registers[0][0])]
    clauses.extend((-registers[0][j],) for j in range(1, bound))
    clauses.append((-last, -registers[width - 2][bound - 1]))

    for i in range(1, width - 1):
        lit = literals[i]
        clauses.append((-lit, registers[i][0]))
        clauses.append((-registers[i - 1][0], registers[i][0]))
        for j in range(1, bound):
            clauses.append((-lit, -registers[i - 1][j - 1], registers[i][j]))
            clauses.append((-registers[i - 1][j], registers[i][j]))
        clauses.append((-lit, -registers[i - 1][bound - 1]))

    return clauses


def at_least(literals, bound, new_var):
    """
    Encoding of sum(literals) >= bound: one clause for bound = 1, otherwise
    at_most() over the negated literals with bound width - bound.
    """
    literals = list(literals)
    if bound > len(literals):
        raise ValueError("'bound' exceeds the number of literals")

    if bound <= 0:
        return []

    if bound == 1:
        return [tuple(literals)]

    return at_most([-lit for lit in literals], len(literals) - bound,
                   new_var)


def exactly_one(literals, new_var):
    """
    Encoding of sum(literals) = 1: one at-least-one clause followed by the
    sequential at-most-one.
    """
    literals = list(literals)
    if not literals:
        raise ValueError("'literals' is empty")

    return [tuple(literals)] + at_most(literals, 1, new_var)
