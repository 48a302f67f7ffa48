"""Numba njit implementations of the hot kernels.

Same signatures and same results as `_kernels_np`; the scan loops abort
each candidate at its first violation, which changes nothing about the
accepted set.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def sh2_violation(table: np.ndarray) -> int:
    n = table.shape[0]
    for x in range(n):
        for y in range(n):
            if min(x, table[x, y]) != min(x, y):
                return x * n + y
    return -1


@njit(cache=True)
def sh3_violation(table: np.ndarray) -> int:
    n = table.shape[0]
    for x in range(n):
        for y in range(n):
            xy = min(x, y)
            for z in range(n):
                if min(x, table[y, z]) != min(x, table[xy, min(x, z)]):
                    return (x * n + y) * n + z
    return -1


@njit(cache=True)
def sh4_violation(table: np.ndarray) -> int:
    n = table.shape[0]
    for x in range(n):
        if table[x, x] != n - 1:
            return x
    return -1


@njit(cache=True)
def _fill_candidate(work, free_rows, free_cols, k, n):
    rem = k
    for c in range(free_rows.shape[0] - 1, -1, -1):
        work[free_rows[c], free_cols[c]] = rem % n
        rem //= n


@njit(cache=True)
def scan_free_cells(template, free_rows, free_cols, start, stop) -> np.ndarray:
    n = template.shape[0]
    out = np.empty(stop - start, np.int64)
    found = 0
    work = template.copy()
    for k in range(start, stop):
        _fill_candidate(work, free_rows, free_cols, k, n)
        if sh4_violation(work) >= 0:
            continue
        if sh2_violation(work) >= 0:
            continue
        if sh3_violation(work) >= 0:
            continue
        out[found] = k
        found += 1
    return out[:found]


@njit(cache=True)
def count_free_cells(template, free_rows, free_cols, start, stop) -> int:
    n = template.shape[0]
    found = 0
    work = template.copy()
    for k in range(start, stop):
        _fill_candidate(work, free_rows, free_cols, k, n)
        if sh4_violation(work) >= 0:
            continue
        if sh2_violation(work) >= 0:
            continue
        if sh3_violation(work) >= 0:
            continue
        found += 1
    return found
