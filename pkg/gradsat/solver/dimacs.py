"""
Reading and writing CNF formulas in DIMACS format, and printing models.

------------------------------------------------------------------------------
COPYRIGHT/LICENSE.  This file is part of the PyGradSAT package.  It is
subject to the license terms in the LICENSE file found in the top-level
directory of this distribution.  No part of the PyGradSAT package, including
this file, may be copied, modified, propagated, or distributed except
according to the terms contained in the LICENSE file.
------------------------------------------------------------------------------
"""
# --- Imports

# GradSAT
from ..errors import DimacsFormatError


# --- Functions

def write_dimacs(num_vars, clauses, comments=()):
    """
    Serialize a formula: comment lines, the 'p cnf <vars> <clauses>' header
    and one zero-terminated clause per line.

    Examples
    --------
    >>> print(write_dimacs(2, [(1, -2), (2,)], ['demo']), end='')
    c demo
    p cnf 2 2
    1 -2 0
    2 0
    """
    clauses = list(clauses)
    lines = ['c {}'.format(comment) for comment in comments]
    lines.append('p cnf {} {}'.format(num_vars, len(clauses)))
    lines.extend(' '.join(str(lit) for lit in clause) + ' 0'
                 for clause in clauses)
    return '\n'.join(lines) + '\n'


def read_dimacs(text):
    """
    Parse a DIMACS CNF formula.

    Clauses may span several lines; each ends with a 0. Comment lines start
    with 'c'; a trailing '%' line (SATLIB style) ends the input.

    Parameters
    ----------
    text: str or file-like object
        DIMACS content

    Return values
    -------------
    num_vars: int
        variable count declared in the header

    clauses: list of tuples of int
        clauses in file order

    comments: list of str
        comment lines without the leading 'c '
    """
    if hasattr(text, 'read'):
        text = text.read()

    num_vars = None
    num_clauses = None
    clauses = []
    comments = []
    pending = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue

        if line.startswith('c'):
            comments.append(line[1:].strip())
            continue

        if line.startswith('%'):
            break

        if line.startswith('p'):
            fields = line.split()
            if num_vars is not None:
                raise DimacsFormatError('duplicate header line',
                                        line_number=line_number)
            if len(fields) != 4 or fields[1] != 'cnf':
                raise DimacsFormatError(
                    "bad header line '{}'".format(line),
                    line_number=line_number)
            try:
                num_vars, num_clauses = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsFormatError(
                    'invalid number of variables or clauses',
                    line_number=line_number)
            if num_vars < 0 or num_clauses < 0:
                raise DimacsFormatError(
                    'negative number of variables or clauses',
                    line_number=line_number)
            continue

        if num_vars is None:
            raise DimacsFormatError('clause before header line',
                                    line_number=line_number)

        try:
            literals = [int(field) for field in line.split()]
        except ValueError:
            raise DimacsFormatError('non-integer field',
                                    line_number=line_number)

        for lit in literals:
            if lit == 0:
                if not pending:
                    raise DimacsFormatError('empty clause',
                                            line_number=line_number)
                clauses.append(tuple(pending))
                pending = []
            elif abs(lit) > num_vars:
                raise DimacsFormatError(
                    'literal {} out of range'.format(lit),
                    line_number=line_number)
            else:
                pending.append(lit)

    if num_vars is None:
        raise DimacsFormatError('missing header line')

    if pending:
        raise DimacsFormatError('last clause is not terminated by 0')

    if len(clauses) != num_clauses:
        raise DimacsFormatError(
            'got {} clauses, expected {}'.format(len(clauses), num_clauses))

    return num_vars, clauses, comments


def format_model(model):
    """
    One line of space-separated signed integers, e.g. '1 -2 3'.
    """
    return ' '.join(str(lit) for lit in model)
