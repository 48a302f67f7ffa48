"""Vectorized numpy implementations of the hot kernels.

This is the fallback backend; `_kernels_nb` provides the numba twin
with identical signatures and identical results, including witness
order.  Violation finders return the flat C-order index of the least
failing tuple, or -1 when the identity holds everywhere.
"""

from __future__ import annotations

import numpy as np


def sh2_violation(table: np.ndarray) -> int:
    n = table.shape[0]
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    bad = np.minimum(x, table) != np.minimum(x, y)
    flat = int(np.argmax(bad))
    return flat if bad.flat[flat] else -1


def sh3_violation(table: np.ndarray) -> int:
    n = table.shape[0]
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    lhs = np.minimum(x, table[y, z])
    rhs = np.minimum(x, table[np.minimum(x, y), np.minimum(x, z)])
    bad = lhs != rhs
    flat = int(np.argmax(bad))
    return flat if bad.flat[flat] else -1


def sh4_violation(table: np.ndarray) -> int:
    n = table.shape[0]
    bad = np.diagonal(table) != n - 1
    i = int(np.argmax(bad))
    return i if bad[i] else -1


def _candidate_tables(template, free_rows, free_cols, idx):
    """Materialize the candidate batch for assignment indices `idx`.

    Assignment k spells base-n digits for the free cells, first cell
    most significant; all other cells come from `template`.
    """
    n = template.shape[0]
    m = idx.shape[0]
    tables = np.broadcast_to(template, (m, n, n)).copy()
    rem = idx.copy()
    for c in range(free_rows.shape[0] - 1, -1, -1):
        rem, digit = np.divmod(rem, n)
        tables[:, free_rows[c], free_cols[c]] = digit
    return tables


def scan_free_cells(template, free_rows, free_cols, start, stop) -> np.ndarray:
    """Ascending assignment indices in [start, stop) whose induced tables
    satisfy SH4, SH2 and SH3.

    Filters are applied cheapest first with survivors compressed between
    stages; the accepted set does not depend on the stage order.
    """
    n = template.shape[0]
    idx = np.arange(start, stop, dtype=np.int64)
    if idx.shape[0] == 0:
        return idx
    tables = _candidate_tables(template, free_rows, free_cols, idx)

    keep = (np.diagonal(tables, axis1=1, axis2=2) == n - 1).all(axis=1)
    idx, tables = idx[keep], tables[keep]
    if idx.shape[0] == 0:
        return idx

    x = np.arange(n)[None, :, None]
    y = np.arange(n)[None, None, :]
    keep = (np.minimum(x, tables) == np.minimum(x, y)).all(axis=(1, 2))
    idx, tables = idx[keep], tables[keep]
    if idx.shape[0] == 0:
        return idx

    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    lhs = np.minimum(x, tables[:, y, z])
    rhs = np.minimum(x, tables[:, np.minimum(x, y), np.minimum(x, z)])
    keep = (lhs == rhs).all(axis=(1, 2, 3))
    return idx[keep]


def count_free_cells(template, free_rows, free_cols, start, stop) -> int:
    return int(scan_free_cells(template, free_rows, free_cols, start, stop).shape[0])
