"""Fixed-format result tables

CSV tables have one header row, ``%.12e`` numbers, comma separators and LF
line endings. JSON tables hold the column names, the rows with full float
precision and optional metadata.
"""
import json
import sys

import numpy as np

CSV_FORMAT = '%.12e'


def _matrix(columns):
    arrays = [np.atleast_1d(np.asarray(v, dtype=float)) for v in columns.values()]
    if len({a.size for a in arrays}) != 1:
        raise ValueError('all table columns need the same length')
    return np.column_stack(arrays)


def _json_number(value):
    return float(value) if np.isfinite(value) else None


def render_table(columns, fmt='csv', meta=None):
    """Text of a table given an ordered mapping name -> column values"""
    matrix = _matrix(columns)
    if fmt == 'csv':
        lines = [','.join(columns)]
        lines.extend(','.join(CSV_FORMAT % v for v in row) for row in matrix)
        return '\n'.join(lines) + '\n'
    if fmt == 'json':
        table = {'columns': list(columns),
                 'rows': [[_json_number(v) for v in row] for row in matrix]}
        if meta:
            table['meta'] = meta
        return json.dumps(table, indent=2) + '\n'
    raise ValueError('unknown table format {!r}'.format(fmt))


def write_table(columns, out=None, fmt='csv', meta=None):
    """Write a table to the file ``out``, or stdout when it is None"""
    text = render_table(columns, fmt, meta)
    if out is None:
        sys.stdout.write(text)
        return None
    with open(out, 'w', newline='\n') as f:
        f.write(text)
    return out
