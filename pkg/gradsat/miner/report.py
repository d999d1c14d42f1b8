"""
Serialization of mining results as JSON records or a text table.

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
import json

# GradSAT
from .MiningResult import MiningResult


# --- Constants

REPORT_FORMATS = ('json', 'text')

_TEXT_COLUMNS = ('pattern', 'support', 'value', 'closed', 'witness')


# --- Functions

def result_record(result, dataset):
    """
    JSON-ready dict of one result, with attribute names and transaction ids
    taken from 'dataset'.

    Examples
    --------
    >>> from fractions import Fraction
    >>> from gradsat.dataset import NumericalDataset, GradualPattern
    >>> from gradsat.dataset import Variation
    >>> ds = NumericalDataset(['a', 'b'], [[1, 3], [2, 2], [3, 4]])
    >>> p = GradualPattern.of((0, Variation.INC), (1, Variation.DEC))
    >>> result = MiningResult(p, Fraction(2, 3), (0, 1), (0, 1))
    >>> record = result_record(result, ds)
    >>> record['items'], record['support']['value']
    (['a+', 'b-'], 0.6666666666666666)
    """
    ids = dataset.transaction_ids
    names = dataset.attribute_names
    return {
        'items': [item.format(names) for item in result.pattern],
        'support': {'numerator': result.support.numerator,
                    'denominator': result.support.denominator,
                    'value': float(result.support)},
        'witness': [ids[index] for index in result.witness],
        'placement': [ids[index] for index in result.model_placement],
        'closed': result.closed,
        'verified': result.verified,
    }


def to_json(results, dataset):
    """
    JSON array of result records, in descending support then pattern order.
    """
    ordered = sorted(results, key=MiningResult.sort_key)
    return json.dumps([result_record(result, dataset) for result in ordered],
                      indent=2) + '\n'


def to_text(results, dataset):
    """
    Aligned text table, in descending support then pattern order.
    """
    ids = dataset.transaction_ids
    names = dataset.attribute_names

    rows = [_TEXT_COLUMNS]
    for result in sorted(results, key=MiningResult.sort_key):
        closed = '?' if result.closed is None else \
            ('yes' if result.closed else 'no')
        rows.append((result.pattern.format(names),
                     str(result.support),
                     '{:.4f}'.format(float(result.support)),
                     closed,
                     ' '.join(ids[index] for index in result.witness)))

    widths = [max(len(row[column]) for row in rows)
              for column in range(len(_TEXT_COLUMNS))]
    lines = ['  '.join(cell.ljust(width)
                       for cell, width in zip(row, widths)).rstrip()
             for row in rows]
    return '\n'.join(lines) + '\n'


def report(results, dataset, output_format='json'):
    """
    Serialize results in 'json' or 'text' format.
    """
    # --- Check arguments

    if output_format not in REPORT_FORMATS:
        raise ValueError("'output_format' is not one of {}".format(
            ', '.join(REPORT_FORMATS)))

    if output_format == 'json':
        return to_json(results, dataset)
    return to_text(results, dataset)
