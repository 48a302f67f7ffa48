"""Shared test helpers: naive reference evaluators, independent of the package.

Everything here works on plain nested lists with plain-int arithmetic
and no shortcuts, so package results can be checked against a second,
dumber route.
"""

from itertools import product

from hypothesis import strategies as st


def ref_sh2_holds_at(t, x, y):
    return min(x, t[x][y]) == min(x, y)


def ref_sh3_holds_at(t, x, y, z):
    return min(x, t[y][z]) == min(x, t[min(x, y)][min(x, z)])


def ref_sh4_holds_at(t, x):
    return t[x][x] == len(t) - 1


def ref_sh2_witness(t):
    n = len(t)
    for x in range(n):
        for y in range(n):
            if not ref_sh2_holds_at(t, x, y):
                return (x, y)
    return None


def ref_sh3_witness(t):
    n = len(t)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not ref_sh3_holds_at(t, x, y, z):
                    return (x, y, z)
    return None


def ref_sh4_witness(t):
    for x in range(len(t)):
        if not ref_sh4_holds_at(t, x):
            return (x,)
    return None


def ref_structural_holds(t):
    return all(t[i][k] == k for i in range(len(t)) for k in range(i))


def ref_valid(t):
    return (
        ref_sh2_witness(t) is None
        and ref_sh3_witness(t) is None
        and ref_sh4_witness(t) is None
    )


def all_tables(n):
    """Every n x n table over the chain, as tuples of tuples."""
    cells = product(range(n), repeat=n * n)
    for flat in cells:
        yield tuple(flat[i * n : (i + 1) * n] for i in range(n))


def as_tuples(table):
    return tuple(tuple(int(v) for v in row) for row in table)


@st.composite
def table_lists(draw, max_n=5):
    """Arbitrary well-formed tables (valid algebras or not)."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    flat = draw(
        st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n)
    )
    return [flat[i * n : (i + 1) * n] for i in range(n)]
