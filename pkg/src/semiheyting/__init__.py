"""Semi-Heyting algebras on finite chains: construction, counting, checking.

The public surface, by theme:

* tables and axiom checks -- `as_table`, `check_sh2`, `check_sh3`,
  `check_sh4`, `check_structural`, `is_valid`, `is_heyting`,
  `check_lemma_zero`, `check_lemma_implication`, `lattice_ops`,
  `heyting_table`, `table_key`, `AxiomReport`
* recursive construction -- `FirstRowSpec`, `first_rows`,
  `first_row_count`, `forced_skeleton`, `extend`, `restrict`,
  `enumerate_tables`
* exact counting -- `count_recursive`, `count_product`, `count_split`
* brute-force oracle -- `oracle_enumerate`, `oracle_count`,
  `SearchSpaceError`
* documents -- `serialize`, `parse`, `TableParseError`,
  `TableValidationError`

Hot kernels run on numba when available; set SEMIHEYTING_BACKEND=numpy
to force the vectorized fallback (see `kernel_backend`).
"""

from .construct import (
    FREE,
    FirstRowSpec,
    enumerate_tables,
    extend,
    first_row_count,
    first_rows,
    forced_skeleton,
    restrict,
)
from .counting import count_product, count_recursive, count_split
from .formats import TableParseError, TableValidationError, parse, serialize
from .kernels import BACKEND as _BACKEND
from .oracle import (
    DEFAULT_FORCED_CAP,
    DEFAULT_PURE_CAP,
    SearchSpaceError,
    oracle_count,
    oracle_enumerate,
)
from .tables import (
    AxiomReport,
    as_table,
    check_lemma_implication,
    check_lemma_zero,
    check_sh2,
    check_sh3,
    check_sh4,
    check_structural,
    heyting_table,
    is_heyting,
    is_valid,
    lattice_ops,
    table_key,
)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the kernel backend selected at import: 'numba' or 'numpy'."""
    return _BACKEND


__all__ = [
    "AxiomReport",
    "DEFAULT_FORCED_CAP",
    "DEFAULT_PURE_CAP",
    "FREE",
    "FirstRowSpec",
    "SearchSpaceError",
    "TableParseError",
    "TableValidationError",
    "as_table",
    "check_lemma_implication",
    "check_lemma_zero",
    "check_sh2",
    "check_sh3",
    "check_sh4",
    "check_structural",
    "count_product",
    "count_recursive",
    "count_split",
    "enumerate_tables",
    "extend",
    "first_row_count",
    "first_rows",
    "forced_skeleton",
    "heyting_table",
    "is_heyting",
    "is_valid",
    "kernel_backend",
    "lattice_ops",
    "oracle_count",
    "oracle_enumerate",
    "parse",
    "restrict",
    "serialize",
    "table_key",
]
