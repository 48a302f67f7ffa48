"""Exact counts of the valid tables on a chain, by two routes.

`count_recursive` multiplies admissible-first-row counts down the
recursion; `count_product` evaluates an independent closed product
formula whose factors are assembled term by term.  The two must agree
for every n; the crosscheck harness and the acceptance suite verify the
equality numerically far past the range where tables can be streamed.

Everything is arbitrary-precision integer arithmetic.  Factorial ratios
are accumulated as falling products; no floats, no rational division.
"""

from __future__ import annotations

from typing import Iterator

from .construct import first_row_count

__all__ = ["count_product", "count_recursive", "count_split"]

# Memo for count_recursive, always contiguous from 1.  Only atomic dict
# operations touch it (no iteration), so concurrent callers are safe;
# the worst case is a harmless duplicate computation.
_N_CACHE = {1: 1}


def _reset_count_cache() -> None:
    _N_CACHE.clear()
    _N_CACHE[1] = 1


def count_recursive(n: int) -> int:
    """Number of valid n-tables via the first-row recurrence.

    Base case 1 for the one-element chain; each further element
    multiplies by the number of admissible first rows.  Memoized and
    iterative, so arbitrarily large n is fine.
    """
    if n < 1:
        raise ValueError("chain size must be >= 1")
    if n in _N_CACHE:
        return _N_CACHE[n]
    m = n
    while m not in _N_CACHE:
        m -= 1
    value = _N_CACHE[m]
    for k in range(m + 1, n + 1):
        value *= first_row_count(k)
        _N_CACHE[k] = value
    return value


def _factors(n: int) -> Iterator[int]:
    """Integer value of each product-formula factor, i = 0 .. n-2.

    Factor i is 1 + sum over j in i+1..n-1 of (n-i-1)!/(n-j-1)!; the
    ratio for consecutive j picks up one more term of the falling
    product, so each addend costs one multiplication.
    """
    for i in range(n - 1):
        factor = 1
        term = 1
        for j in range(i + 1, n):
            term *= n - j
            factor += term
        yield factor


def _balanced_prod(values: list[int]) -> int:
    # Pairwise tree product: keeps operand sizes balanced, which is much
    # faster than a left fold once the partial products grow large.
    if not values:
        return 1
    while len(values) > 1:
        paired = [a * b for a, b in zip(values[::2], values[1::2])]
        if len(values) % 2:
            paired.append(values[-1])
        values = paired
    return values[0]


def count_product(n: int) -> int:
    """Number of valid n-tables via the closed product formula.

    Defined as 1 for n = 1 so both counting routes share a base case.
    """
    if n < 1:
        raise ValueError("chain size must be >= 1")
    return _balanced_prod(list(_factors(n)))


def count_split(n: int) -> tuple[int, int]:
    """Peel the leading factor off the product formula.

    Returns ``(n0, nr)`` with ``n0 * nr == count_product(n)``.  The
    leading factor equals `first_row_count(n)` and the remainder equals
    ``count_product(n - 1)``; that identity is what the crosscheck
    harness verifies.  For n = 2 the remainder is the empty product 1.
    """
    if n < 2:
        raise ValueError("the split needs a chain of size >= 2")
    factors = list(_factors(n))
    return factors[0], _balanced_prod(factors[1:])
