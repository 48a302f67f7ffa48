import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiheyting import (
    count_product,
    count_recursive,
    count_split,
    first_row_count,
)

GOLDEN = [1, 2, 10, 160, 10400, 3390400, 6635012800]


class TestGoldenValues:
    def test_recursive(self):
        assert [count_recursive(n) for n in range(1, 8)] == GOLDEN

    def test_product(self):
        assert [count_product(n) for n in range(1, 8)] == GOLDEN

    def test_two_chain_derivation(self):
        assert first_row_count(2) * count_recursive(1) == 2 == count_recursive(2)

    def test_rejects_n0(self):
        with pytest.raises(ValueError):
            count_recursive(0)
        with pytest.raises(ValueError):
            count_product(0)


class TestFormulaEquivalence:
    def test_equal_up_to_200(self):
        for n in range(1, 201):
            assert count_recursive(n) == count_product(n), f"n={n}"

    def test_n20_cross_formula(self):
        assert count_recursive(20) == count_product(20)

    def test_product_via_explicit_factorials(self):
        # direct transcription of the product using factorial quotients
        for n in range(2, 40):
            expected = math.prod(
                1
                + sum(
                    math.factorial(n - i - 1) // math.factorial(n - j - 1)
                    for j in range(i + 1, n)
                )
                for i in range(n - 1)
            )
            assert count_product(n) == expected


class TestParity:
    def test_even_from_2_to_200(self):
        for n in range(2, 201):
            assert count_recursive(n) % 2 == 0, f"n={n}"


class TestMonotonic:
    def test_strictly_increasing(self):
        previous = 0
        for n in range(1, 201):
            value = count_recursive(n)
            assert value > previous
            previous = value


class TestSplit:
    @pytest.mark.parametrize(
        "n,expected",
        [(2, (2, 1)), (3, (5, 2)), (4, (16, 10)), (7, (1957, 3390400))],
    )
    def test_golden_splits(self, n, expected):
        assert count_split(n) == expected

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            count_split(1)

    def test_factoring_identity_up_to_50(self):
        for n in range(2, 51):
            n0, nr = count_split(n)
            assert n0 == first_row_count(n)
            assert nr == count_product(n - 1)
            assert n0 * nr == count_product(n)


class TestRecurrenceLaw:
    @given(st.integers(2, 80))
    @settings(max_examples=30)
    def test_recursive_step(self, n):
        assert count_recursive(n) == first_row_count(n) * count_recursive(n - 1)


class TestLargeN:
    def test_no_recursion_limit(self):
        # the memoized walk must be iterative: computing 300 fresh levels
        # under a tiny interpreter stack would explode otherwise
        import sys

        from semiheyting.counting import _reset_count_cache

        _reset_count_cache()
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(100)
        try:
            value = count_recursive(300)
        finally:
            sys.setrecursionlimit(limit)
        assert value == count_product(300)
