"""
Numerical datasets: transactions (rows) described by numeric attributes.

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
import csv
import io
import logging
import re

# External packages
import numpy
import pandas

# GradSAT
from ..errors import DatasetFormatError


# --- Constants

_LOGGER = logging.getLogger(__name__)

_RAGGED_ROW = re.compile(r"Expected (\d+) fields in line (\d+), saw (\d+)")


# --- Class definition

class NumericalDataset:
    """
    Immutable relation T x A of finite real values.

    Row order is significant: it is the temporal order used by the temporal
    variant of the mining problem.
    """
    # --- Properties

    @property
    def attribute_names(self):
        """
        tuple of str: attribute labels, one per column
        """
        return self._attribute_names

    @property
    def transaction_ids(self):
        """
        tuple of str: transaction labels, one per row
        """
        return self._transaction_ids

    @property
    def values(self):
        """
        numpy.ndarray: read-only (n, m) array of float64 values

        Notes
        -----
        * values.dtype = 'float64'
        """
        return self._values

    @property
    def num_transactions(self):
        """
        int: number of transactions n
        """
        return self._values.shape[0]

    @property
    def num_attributes(self):
        """
        int: number of attributes m
        """
        return self._values.shape[1]

    # --- Public methods

    def __init__(self, attribute_names, transactions, transaction_ids=None):
        """
        Initialize NumericalDataset object.

        Parameters
        ----------
        attribute_names: sequence of str
            attribute labels

        transactions: sequence of sequences of numbers, or numpy.ndarray
            one row of values per transaction

        transaction_ids: sequence of str
            transaction labels; defaults to 't1', ..., 'tn'

        Examples
        --------
        >>> ds = NumericalDataset(['a', 'b'], [[1, 2], [3, 4]])
        >>> ds.num_transactions, ds.num_attributes
        (2, 2)
        >>> ds.transaction_ids
        ('t1', 't2')
        """
        # --- Check arguments

        # attribute_names
        attribute_names = tuple(str(name) for name in attribute_names)
        if not attribute_names:
            raise ValueError("'attribute_names' is empty")

        if len(set(attribute_names)) != len(attribute_names):
            raise ValueError("'attribute_names' contains duplicate names")

        # transactions
        try:
            values = numpy.array(transactions, dtype='float64')
        except (TypeError, ValueError):
            raise ValueError("'transactions' contains non-numeric values")

        if values.ndim != 2 or values.shape[0] == 0:
            raise ValueError("'transactions' is not a non-empty list of rows")

        if values.shape[1] != len(attribute_names):
            err_msg = "'transactions' rows do not have one value per " \
                      "attribute"
            raise ValueError(err_msg)

        if not numpy.all(numpy.isfinite(values)):
            raise ValueError("'transactions' contains a non-finite value")

        # transaction_ids
        if transaction_ids is None:
            transaction_ids = ['t{}'.format(i + 1)
                               for i in range(values.shape[0])]
        transaction_ids = tuple(str(tid) for tid in transaction_ids)

        if len(transaction_ids) != values.shape[0]:
            err_msg = "'transaction_ids' does not have one id per transaction"
            raise ValueError(err_msg)

        if len(set(transaction_ids)) != len(transaction_ids):
            raise ValueError("'transaction_ids' contains duplicate ids")

        # --- Set property and attribute values

        values.setflags(write=False)
        self._values = values
        self._attribute_names = attribute_names
        self._transaction_ids = transaction_ids

    def column(self, attribute_index):
        """
        Return the values of one attribute as a read-only numpy.ndarray.
        """
        return self._values[:, attribute_index]

    def to_csv(self, include_ids=True):
        """
        Serialize the dataset in the CSV layout accepted by parse_csv().

        Parameters
        ----------
        include_ids: bool
            if True, write the transaction ids as a leading 'id' column
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')

        header = list(self._attribute_names)
        if include_ids:
            header = ['id'] + header
        writer.writerow(header)

        for tid, row in zip(self._transaction_ids, self._values):
            fields = [repr(float(value)) for value in row]
            if include_ids:
                fields = [tid] + fields
            writer.writerow(fields)

        return buffer.getvalue()

    def __repr__(self):
        return 'NumericalDataset(n={}, m={})'.format(self.num_transactions,
                                                     self.num_attributes)


# --- Functions

def parse_csv(text, has_id_column=False):
    """
    Parse a CSV dataset.

    The first line holds the attribute names; each following non-blank line
    holds one transaction. If 'has_id_column' is True, the first field of
    each line (header included) is the transaction id column.

    Parameters
    ----------
    text: str or file-like object
        CSV content

    has_id_column: bool
        whether the first column holds transaction ids

    Return values
    -------------
    NumericalDataset

    Exceptions
    ----------
    DatasetFormatError: if the header or a transaction line is malformed;
        'line_number' points at the offending line of 'text'

    Examples
    --------
    >>> ds = parse_csv('a,b\\n1,2\\n3,4.5\\n')
    >>> ds.values.tolist()
    [[1.0, 2.0], [3.0, 4.5]]
    """
    if hasattr(text, 'read'):
        text = text.read()

    # --- Read raw fields

    # the first non-blank line is the header
    content = text.lstrip()
    if not content:
        raise DatasetFormatError('empty input', line_number=1)
    offset = text[:len(text) - len(content)].count('\n')

    try:
        frame = pandas.read_csv(io.StringIO(content), header=None, dtype=str,
                                keep_default_na=False,
                                skip_blank_lines=False)
    except pandas.errors.ParserError as error:
        match = _RAGGED_ROW.search(str(error))
        if match is None:
            raise DatasetFormatError(str(error)) from error
        expected, line, found = (int(group) for group in match.groups())
        err_msg = 'expected {} fields, found {}'.format(expected, found)
        raise DatasetFormatError(err_msg,
                                 line_number=line + offset) from error

    # row index i of 'frame' is line i + 1 + offset of 'text'
    frame.index = frame.index + 1 + offset
    num_fields = frame.notna().sum(axis=1)
    frame = frame.apply(lambda column: column.str.strip())

    # --- Read header

    header_line = int(frame.index[0])
    header = frame.iloc[0].tolist()
    if has_id_column:
        header = header[1:]

    if not header or not all(header):
        raise DatasetFormatError('missing attribute name in header',
                                 line_number=header_line)

    if len(set(header)) != len(header):
        raise DatasetFormatError('duplicate attribute name in header',
                                 line_number=header_line)

    blank = frame.fillna('').eq('').all(axis=1)
    rows = frame.iloc[1:][~blank.iloc[1:]]
    if rows.empty:
        raise DatasetFormatError('no transactions',
                                 line_number=header_line + 1)

    # --- Read transactions

    short = num_fields.loc[rows.index] < frame.shape[1]
    if short.any():
        line_number = int(short.idxmax())
        err_msg = 'expected {} fields, found {}'.format(
            frame.shape[1], num_fields.loc[line_number])
        raise DatasetFormatError(err_msg, line_number=line_number)

    transaction_ids = None
    if has_id_column:
        ids = rows.iloc[:, 0]
        duplicated = ids.duplicated()
        if duplicated.any():
            line_number = int(duplicated.idxmax())
            raise DatasetFormatError(
                "duplicate transaction id '{}'".format(ids.loc[line_number]),
                line_number=line_number)
        transaction_ids = ids.tolist()
        rows = rows.iloc[:, 1:]

    values = rows.apply(pandas.to_numeric, errors='coerce') \
        .to_numpy(dtype=float)
    invalid = numpy.argwhere(~numpy.isfinite(values))
    if invalid.size:
        row, column = invalid[0]
        field = rows.iat[row, column]
        problem = 'non-numeric' if numpy.isnan(values[row, column]) \
            else 'non-finite'
        raise DatasetFormatError(
            "{} value '{}'".format(problem, field),
            line_number=int(rows.index[row]))

    dataset = NumericalDataset(header, values, transaction_ids)
    _LOGGER.info('loaded dataset: n=%d transactions, m=%d attributes',
                 dataset.num_transactions, dataset.num_attributes)

    return dataset


def load_csv(path, has_id_column=False):
    """
    Read and parse a UTF-8 CSV dataset file (see parse_csv()).
    """
    with open(path, encoding='utf-8') as file_:
        return parse_csv(file_, has_id_column=has_id_column)
