"""Recursive construction of every valid implication table on a chain.

Dropping row 0 and column 0 of a valid ``n``-table and shifting every
entry down by one leaves a valid ``(n-1)``-table (`restrict`).
Conversely, any valid ``(n-1)``-table extends to a valid ``n``-table by
re-shifting it into rows and columns ``1..n-1``, zeroing column 0, and
choosing an admissible first row (`extend`).  Admissible first rows are
parameterized by `FirstRowSpec`; enumerating specs against every
smaller table yields each valid table exactly once (`enumerate_tables`).

The enumeration order is fixed and documented so golden files and
indexed access are reproducible: specs go by ``top_image`` ascending,
then choices lexicographically; the recursion emits all extensions of
one smaller table before moving to the next.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .tables import as_table, is_valid

__all__ = [
    "FREE",
    "FirstRowSpec",
    "enumerate_tables",
    "extend",
    "first_row_count",
    "first_rows",
    "forced_skeleton",
    "restrict",
]

# Sentinel marking undetermined cells in a partial table.
FREE = -1


@dataclass(frozen=True)
class FirstRowSpec:
    """Admissible row 0 of an ``n``-table, in parameterized form.

    ``top_image`` is the row's value at the last column (what bottom
    maps top to); every column past ``top_image`` takes that same
    value.  ``choices[h-1]`` is the value at column ``h`` for
    ``1 <= h <= top_image`` and must lie in ``h .. n-1``.  Column 0 is
    always ``n - 1``.  Distinct specs induce distinct rows, since
    ``top_image`` is recoverable as the row's last entry.
    """

    n: int
    top_image: int
    choices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("first rows exist only for chains of size >= 2")
        if not 0 <= self.top_image <= self.n - 1:
            raise ValueError(
                f"top_image {self.top_image} outside the chain 0..{self.n - 1}"
            )
        if len(self.choices) != self.top_image:
            raise ValueError(
                f"expected {self.top_image} choices, got {len(self.choices)}"
            )
        for h, v in enumerate(self.choices, start=1):
            if not h <= v <= self.n - 1:
                raise ValueError(
                    f"choice for column {h} must lie in {h}..{self.n - 1}, got {v}"
                )

    def induced_row(self) -> np.ndarray:
        row = np.full(self.n, self.top_image, dtype=np.int64)
        row[0] = self.n - 1
        row[1 : self.top_image + 1] = self.choices
        return row


def forced_skeleton(n: int) -> np.ndarray:
    """The partial table with only the forced cells filled in.

    Diagonal entries are the top element, below-diagonal entries equal
    their column index (column 0 in particular is zero below row 0),
    and the ``n*(n-1)/2`` cells above the diagonal are `FREE`.
    """
    if n < 1:
        raise ValueError("chain size must be >= 1")
    t = np.full((n, n), FREE, dtype=np.int64)
    for i in range(n):
        t[i, :i] = np.arange(i)
        t[i, i] = n - 1
    return t


def first_rows(n: int) -> Iterator[FirstRowSpec]:
    """Yield every admissible first row spec for an ``n``-table once.

    Order: ``top_image`` ascending, then choices lexicographically.
    """
    if n < 2:
        raise ValueError("first rows exist only for chains of size >= 2")
    return _first_rows(n)


def _first_rows(n: int) -> Iterator[FirstRowSpec]:
    for t in range(n):
        for choices in itertools.product(*(range(h, n) for h in range(1, t + 1))):
            yield FirstRowSpec(n, t, choices)


def first_row_count(n: int) -> int:
    """Number of admissible first rows: sum over i of (n-1)!/i!.

    Exact integer arithmetic; each factorial ratio is accumulated as a
    falling product, never via float division.
    """
    if n < 1:
        raise ValueError("chain size must be >= 1")
    total = 0
    term = 1  # (n-1)!/i!, starting at i = n-1
    for i in range(n - 1, -1, -1):
        total += term
        term *= i
    return total


def extend(sub, spec: FirstRowSpec) -> np.ndarray:
    """Extend a valid ``(n-1)``-table by one admissible first row.

    The smaller table is embedded with every entry shifted up by one
    (its chain becomes ``a1 < ... < a(n-1)``), column 0 becomes zero
    below row 0, and row 0 is the spec's induced row.  The result is
    always a valid ``n``-table.
    """
    s = as_table(sub)
    n = spec.n
    if s.shape[0] != n - 1:
        raise ValueError(
            f"cannot extend a {s.shape[0]}-table with a first row for n={n}"
        )
    if not is_valid(s):
        raise ValueError("table to extend is not a valid semi-Heyting table")
    t = np.empty((n, n), dtype=np.int64)
    t[0] = spec.induced_row()
    t[1:, 0] = 0
    t[1:, 1:] = s + 1
    return t


def restrict(table) -> np.ndarray:
    """Drop row 0 and column 0 and shift entries down by one.

    Inverse of `extend` on its first argument; the result is always a
    valid ``(n-1)``-table.
    """
    t = as_table(table)
    if t.shape[0] < 2:
        raise ValueError("cannot restrict a 1-element chain")
    if not is_valid(t):
        raise ValueError("table to restrict is not a valid semi-Heyting table")
    return t[1:, 1:] - 1


def enumerate_tables(n: int) -> Iterator[np.ndarray]:
    """Stream every valid ``n``-table exactly once, depth-first.

    Lazy: memory stays bounded by the recursion path, no level is ever
    materialized.  Each yielded array is freshly allocated and owned by
    the caller.
    """
    if n < 1:
        raise ValueError("chain size must be >= 1")
    return _generate(n)


def _generate(n: int) -> Iterator[np.ndarray]:
    if n == 1:
        yield np.zeros((1, 1), dtype=np.int64)
        return
    rows = np.stack([spec.induced_row() for spec in first_rows(n)])
    count = rows.shape[0]
    base = np.empty((n, n), dtype=np.int64)
    base[1:, 0] = 0
    for sub in _generate(n - 1):
        base[1:, 1:] = sub
        base[1:, 1:] += 1
        for r in range(count):
            t = base.copy()
            t[0] = rows[r]
            yield t
