"""Brute-force search for valid tables, independent of the constructor.

Candidates are spelled out cell by cell and filtered by the axiom
checks alone; nothing here consults the recursive construction, so
agreement between the two routes is meaningful evidence.

Two modes:

* ``pure`` -- every cell is free and only SH2/SH3/SH4 filter the
  candidates.  Search space ``n ** (n*n)``; capped at n = 3 by default
  (19683 candidates).
* ``forced`` -- diagonal, column 0 and below-diagonal cells are fixed
  to their forced values and only the cells above the diagonal are
  searched.  Search space ``n ** (n*(n-1)/2)``; capped at n = 5 by
  default (about 9.8 million candidates).

Free cells are ordered row-major and candidates are visited in
lexicographic order of their assignment, so output order is
deterministic and the space can be partitioned into index ranges for
concurrent scans.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from . import kernels
from .construct import FREE, forced_skeleton

__all__ = [
    "DEFAULT_FORCED_CAP",
    "DEFAULT_PURE_CAP",
    "SearchSpaceError",
    "oracle_count",
    "oracle_enumerate",
]

DEFAULT_PURE_CAP = 3
DEFAULT_FORCED_CAP = 5
_DEFAULT_CHUNK = 1 << 16


class SearchSpaceError(ValueError):
    """Requested search exceeds the mode's hard cap."""

    def __init__(self, n: int, mode: str, cap: int, space: int):
        self.n = n
        self.mode = mode
        self.cap = cap
        self.space = space
        super().__init__(
            f"{mode} search at n={n} would scan {space} candidate tables, "
            f"beyond the cap n<={cap}; raise the cap explicitly or use a "
            f"counting formula instead"
        )


def _search_frame(n: int, mode: str, cap: int | None, chunk: int):
    """Template, free-cell coordinates and search-space size for a mode."""
    if n < 1:
        raise ValueError("chain size must be >= 1")
    if chunk < 1:
        raise ValueError("chunk size must be >= 1")
    if mode == "pure":
        cap = DEFAULT_PURE_CAP if cap is None else cap
        template = np.zeros((n, n), dtype=np.int64)
        cells = [(i, k) for i in range(n) for k in range(n)]
    elif mode == "forced":
        cap = DEFAULT_FORCED_CAP if cap is None else cap
        template = forced_skeleton(n)
        cells = [(i, k) for i in range(n) for k in range(n) if template[i, k] == FREE]
        template[template == FREE] = 0  # placeholders; the scan overwrites them
    else:
        raise ValueError(f"unknown oracle mode {mode!r}: expected 'pure' or 'forced'")
    space = n ** len(cells)
    if n > cap:
        raise SearchSpaceError(n, mode, cap, space)
    rows = np.array([c[0] for c in cells], dtype=np.int64)
    cols = np.array([c[1] for c in cells], dtype=np.int64)
    return template, rows, cols, space


def _decode(template, rows, cols, n: int, k: int) -> np.ndarray:
    t = template.copy()
    for c in range(rows.shape[0] - 1, -1, -1):
        t[rows[c], cols[c]] = k % n
        k //= n
    return t


def oracle_enumerate(
    n: int,
    mode: str = "forced",
    *,
    cap: int | None = None,
    chunk: int = _DEFAULT_CHUNK,
) -> Iterator[np.ndarray]:
    """Yield every table passing the mode's filter, exactly once.

    Order is lexicographic in the free-cell assignment.  The space is
    scanned in bounded chunks, so memory stays flat regardless of n.
    """
    frame = _search_frame(n, mode, cap, chunk)
    return _scan(frame, n, chunk)


def _scan(frame, n: int, chunk: int) -> Iterator[np.ndarray]:
    template, rows, cols, space = frame
    for start in range(0, space, chunk):
        stop = min(start + chunk, space)
        for k in kernels.scan_free_cells(template, rows, cols, start, stop):
            yield _decode(template, rows, cols, n, int(k))


def oracle_count(
    n: int,
    mode: str = "forced",
    *,
    cap: int | None = None,
    chunk: int = _DEFAULT_CHUNK,
) -> int:
    """Number of tables `oracle_enumerate` would yield, without building them."""
    template, rows, cols, space = _search_frame(n, mode, cap, chunk)
    total = 0
    for start in range(0, space, chunk):
        stop = min(start + chunk, space)
        total += int(kernels.count_free_cells(template, rows, cols, start, stop))
    return total
