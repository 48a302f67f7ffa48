"""Agreement harness tying the constructor, the oracle and the formulas.

Every route to the same fact is compared against every other within its
feasible range: enumerated table sets against brute-force table sets,
streamed lengths against both counting formulas, formula against
formula far beyond streaming range, plus the structural invariants that
must hold on every enumerated table.  One `CheckResult` per comparison;
a failing result names the first offending chain size.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .construct import enumerate_tables, extend, first_row_count, first_rows, restrict
from .counting import count_product, count_recursive, count_split
from .oracle import oracle_count, oracle_enumerate
from .tables import (
    check_lemma_implication,
    check_lemma_zero,
    check_sh2,
    check_sh3,
    check_sh4,
    check_structural,
    is_heyting,
    table_key,
)

__all__ = ["CheckResult", "run_crosscheck"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f": {self.detail}" if self.detail and not self.passed else ""
        return f"{status}  {self.name}{suffix}"


def run_crosscheck(
    max_pure: int = 3,
    max_forced: int = 5,
    max_construct: int = 6,
    max_formula: int = 200,
) -> list[CheckResult]:
    """Run the full agreement matrix and return one result per check."""
    results: list[CheckResult] = []

    def add(name: str, failure: str | None) -> None:
        results.append(CheckResult(name, failure is None, failure or ""))

    # Materialize the small levels once; everything below reuses them.
    tables = {n: list(enumerate_tables(n)) for n in range(1, max_forced + 1)}
    keys = {n: Counter(table_key(t) for t in tables[n]) for n in tables}

    def set_mismatch(mode: str, cap: int) -> str | None:
        for n in range(1, cap + 1):
            oracle_keys = Counter(table_key(t) for t in oracle_enumerate(n, mode))
            if oracle_keys != keys[n]:
                return (
                    f"at n={n}: constructor yields {sum(keys[n].values())} tables, "
                    f"oracle yields {sum(oracle_keys.values())}, sets differ"
                )
        return None

    add(
        f"enumerate(n) == oracle_enumerate(n, pure) as multisets [n <= {max_pure}]",
        set_mismatch("pure", max_pure),
    )
    add(
        f"enumerate(n) == oracle_enumerate(n, forced) as multisets [n <= {max_forced}]",
        set_mismatch("forced", max_forced),
    )

    def count_mismatch(mode: str, cap: int) -> str | None:
        for n in range(1, cap + 1):
            got = oracle_count(n, mode)
            want = count_recursive(n)
            if got != want:
                return f"count_recursive({n})={want} vs oracle_count({n})={got}"
            want = count_product(n)
            if got != want:
                return f"count_product({n})={want} vs oracle_count({n})={got}"
        return None

    add(
        f"both formulas vs oracle_count(n, pure) [n <= {max_pure}]",
        count_mismatch("pure", max_pure),
    )
    add(
        f"both formulas vs oracle_count(n, forced) [n <= {max_forced}]",
        count_mismatch("forced", max_forced),
    )

    def stream_mismatch() -> str | None:
        for n in range(1, max_construct + 1):
            got = (
                len(tables[n])
                if n in tables
                else sum(1 for _ in enumerate_tables(n))
            )
            want = count_recursive(n)
            if got != want:
                return f"len(enumerate({n}))={got} vs count_recursive({n})={want}"
        return None

    add(
        f"streamed length of enumerate(n) vs count_recursive(n) [n <= {max_construct}]",
        stream_mismatch(),
    )

    def formula_mismatch() -> str | None:
        for n in range(1, max_formula + 1):
            a, b = count_recursive(n), count_product(n)
            if a != b:
                return f"count_recursive({n})={a} vs count_product({n})={b}"
        return None

    add(
        f"count_recursive(n) == count_product(n) [n <= {max_formula}]",
        formula_mismatch(),
    )

    def parity_mismatch() -> str | None:
        for n in range(2, max_formula + 1):
            if count_recursive(n) % 2 != 0:
                return f"count_recursive({n}) is odd"
        return None

    add(f"count_recursive(n) is even [2 <= n <= {max_formula}]", parity_mismatch())

    split_cap = min(50, max_formula)

    def split_mismatch() -> str | None:
        for n in range(2, split_cap + 1):
            got = count_split(n)
            want = (first_row_count(n), count_product(n - 1))
            if got != want:
                return f"count_split({n})={got} vs {want}"
        return None

    add(
        f"count_split(n) == (first_row_count(n), count_product(n-1)) "
        f"[2 <= n <= {split_cap}]",
        split_mismatch(),
    )

    def axiom_failure() -> str | None:
        for n, level in tables.items():
            for t in level:
                for report in (check_sh2(t), check_sh3(t), check_sh4(t),
                               check_structural(t)):
                    if not report.passed:
                        return (
                            f"at n={n}: {report.violated_axiom} fails at "
                            f"{report.witness} on an enumerated table"
                        )
        return None

    add(
        f"SH2/SH3/SH4/structural pass on every enumerated table [n <= {max_forced}]",
        axiom_failure(),
    )

    def lemma_failure() -> str | None:
        for n, level in tables.items():
            for t in level:
                if not check_lemma_zero(t):
                    return f"at n={n}: bottom-row all-or-nothing law fails"
                if not check_lemma_implication(t):
                    return f"at n={n}: row-determination law fails"
        return None

    add(
        f"lemma invariants hold on every enumerated table [n <= {max_forced}]",
        lemma_failure(),
    )

    def heyting_mismatch() -> str | None:
        for n, level in tables.items():
            found = sum(1 for t in level if is_heyting(t))
            if found != 1:
                return f"at n={n}: {found} Heyting tables instead of 1"
        return None

    add(f"exactly one Heyting table per chain size [n <= {max_forced}]",
        heyting_mismatch())

    def roundtrip_mismatch() -> str | None:
        for n in range(2, max_forced + 1):
            for t in tables[n]:
                if table_key(restrict(t)) not in keys[n - 1]:
                    return f"at n={n}: restrict of an enumerated table is not valid"
            specs = list(first_rows(n))
            for s in tables[n - 1]:
                for spec in specs:
                    if not np.array_equal(restrict(extend(s, spec)), s):
                        return f"at n={n}: restrict(extend(S, row)) != S"
        return None

    add(
        f"restrict inverts extend and lands one level down [n <= {max_forced}]",
        roundtrip_mismatch(),
    )

    return results
