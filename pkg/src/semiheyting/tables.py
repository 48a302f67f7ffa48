"""Implication tables on finite chains and the semi-Heyting axiom checks.

A chain with ``n`` elements is the totally ordered lattice
``0 = a0 < a1 < ... < a(n-1) = 1``.  Elements are plain indices
``0 .. n-1``, so meet and join are ``min`` and ``max``.  An algebra
structure on the chain is fully determined by its implication table:
the ``n x n`` integer matrix ``T`` with ``T[i, k]`` = index of
``ai -> ak`` (rows are the left argument of ``->``).

A table is *valid* when it satisfies the three implication identities

* SH2: ``x ^ (x -> y) == x ^ y``
* SH3: ``x ^ (y -> z) == x ^ ((x ^ y) -> (x ^ z))``
* SH4: ``x -> x == 1``   (every diagonal entry equals ``n - 1``)

together with the structural law that below the diagonal the table is
forced: ``T[i, k] == k`` for ``k < i``.  The structural law is a
consequence of the identities on a chain; it is checked separately so
that encoding bugs surface early and so the brute-force oracle can run
without assuming it.

All functions here are pure and the arrays they return are fresh;
everything is safe to call from multiple threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels

__all__ = [
    "AxiomReport",
    "as_table",
    "check_lemma_implication",
    "check_lemma_zero",
    "check_sh2",
    "check_sh3",
    "check_sh4",
    "check_structural",
    "heyting_table",
    "is_heyting",
    "is_valid",
    "lattice_ops",
    "table_key",
]


@dataclass(frozen=True)
class AxiomReport:
    """Verdict of one axiom sweep.

    ``witness`` is the lexicographically least tuple at which the named
    identity fails (scanning x, then y, then z); it is ``None`` exactly
    when the check passed.
    """

    passed: bool
    violated_axiom: str | None = None
    witness: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.passed != (self.violated_axiom is None and self.witness is None):
            raise ValueError("report verdict inconsistent with witness fields")


def as_table(table) -> np.ndarray:
    """Validate and normalize a table to a contiguous int64 square matrix.

    Accepts any nested-sequence or ndarray input.  Raises TypeError for
    non-integer entries and ValueError for a non-square shape or an
    entry outside ``0 .. n-1``.
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(
            f"implication table must be a nonempty square matrix, got shape {arr.shape}"
        )
    if not np.issubdtype(arr.dtype, np.integer):
        raise TypeError(f"table entries must be integers, got dtype {arr.dtype}")
    n = arr.shape[0]
    if ((arr < 0) | (arr >= n)).any():
        i, k = np.argwhere((arr < 0) | (arr >= n))[0]
        raise ValueError(
            f"entry ({i},{k}) = {arr[i, k]} outside the chain 0..{n - 1}"
        )
    return np.ascontiguousarray(arr, dtype=np.int64)


def table_key(table) -> tuple[int, bytes]:
    """Hashable identity of a table, for set and multiset comparisons."""
    t = as_table(table)
    return (t.shape[0], t.tobytes())


def lattice_ops(x: int, y: int, n: int) -> tuple[int, int]:
    """Meet and join of two chain elements: ``(min(x, y), max(x, y))``."""
    for v in (x, y):
        if not 0 <= v <= n - 1:
            raise ValueError(f"element {v} outside the chain 0..{n - 1}")
    return (min(x, y), max(x, y))


def heyting_table(n: int) -> np.ndarray:
    """The Goedel table: ``x -> y = 1`` if ``x <= y``, else ``y``.

    This is the unique Heyting implication on a chain.
    """
    if n < 1:
        raise ValueError("chain size must be >= 1")
    t = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        t[i, :i] = np.arange(i)
        t[i, i:] = n - 1
    return t


def check_sh2(table) -> AxiomReport:
    """Sweep all pairs (x, y) for a violation of ``x ^ (x -> y) == x ^ y``."""
    t = as_table(table)
    n = t.shape[0]
    flat = int(kernels.sh2_violation(t))
    if flat < 0:
        return AxiomReport(True)
    return AxiomReport(False, "SH2", (flat // n, flat % n))


def check_sh3(table) -> AxiomReport:
    """Sweep all triples (x, y, z) for a violation of
    ``x ^ (y -> z) == x ^ ((x ^ y) -> (x ^ z))``."""
    t = as_table(table)
    n = t.shape[0]
    flat = int(kernels.sh3_violation(t))
    if flat < 0:
        return AxiomReport(True)
    return AxiomReport(False, "SH3", (flat // (n * n), (flat // n) % n, flat % n))


def check_sh4(table) -> AxiomReport:
    """Check that every diagonal entry is the top element."""
    t = as_table(table)
    x = int(kernels.sh4_violation(t))
    if x < 0:
        return AxiomReport(True)
    return AxiomReport(False, "SH4", (x,))


def check_structural(table) -> AxiomReport:
    """Check the forced below-diagonal entries: ``T[i, k] == k`` for k < i.

    Column 0 zeros for rows >= 1 are the ``k = 0`` case.
    """
    t = as_table(table)
    n = t.shape[0]
    for i in range(n):
        for k in range(i):
            if t[i, k] != k:
                return AxiomReport(False, "STRUCTURAL", (i, k))
    return AxiomReport(True)


def is_valid(table) -> bool:
    """True iff the table satisfies SH2, SH3, SH4 and the structural law."""
    t = as_table(table)
    return (
        kernels.sh4_violation(t) < 0
        and kernels.sh2_violation(t) < 0
        and kernels.sh3_violation(t) < 0
        and check_structural(t).passed
    )


def is_heyting(table) -> bool:
    """True iff the table is the Goedel (Heyting) implication on its chain."""
    t = as_table(table)
    n = t.shape[0]
    for i in range(n):
        for k in range(n):
            expected = n - 1 if i <= k else k
            if t[i, k] != expected:
                return False
    return True


def check_lemma_zero(table) -> bool:
    """Bottom's row is all-or-nothing past column 0.

    True iff: some nonbottom column of row 0 holding 0 forces every
    nonbottom column of row 0 to hold 0.
    """
    t = as_table(table)
    rest = t[0, 1:]
    if (rest == 0).any():
        return bool((rest == 0).all())
    return True


def check_lemma_implication(table) -> bool:
    """Rows below top are determined past their top-column value.

    For each row ``a < n-1`` with ``b = T[a, n-1]`` and each column
    ``c > a``: the entry must equal ``b`` when ``b < c`` and must lie in
    the up-set ``c .. n-1`` when ``b >= c``.
    """
    t = as_table(table)
    n = t.shape[0]
    for a in range(n - 1):
        b = int(t[a, n - 1])
        for c in range(a + 1, n):
            v = int(t[a, c])
            if b < c:
                if v != b:
                    return False
            elif v < c:
                return False
    return True
