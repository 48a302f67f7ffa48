"""Kernel backend selection.

The axiom sweeps and the brute-force candidate scan exist twice with
identical signatures and results:

* ``semiheyting._kernels_nb`` -- numba ``@njit`` loops (default when
  numba imports cleanly);
* ``semiheyting._kernels_np`` -- vectorized pure-numpy fallback.

The environment variable ``SEMIHEYTING_BACKEND`` picks one at import
time: ``numba``, ``numpy``, or ``auto`` (the default).  ``numba`` fails
loudly if numba is unavailable; ``auto`` falls back to numpy.
"""

from __future__ import annotations

import os

_ENV_VAR = "SEMIHEYTING_BACKEND"
_choice = os.environ.get(_ENV_VAR, "auto").strip().lower()

if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"{_ENV_VAR}={_choice!r}: expected one of 'auto', 'numba', 'numpy'"
    )

if _choice == "numpy":
    from . import _kernels_np as _impl

    BACKEND = "numpy"
elif _choice == "numba":
    from . import _kernels_nb as _impl

    BACKEND = "numba"
else:
    try:
        from . import _kernels_nb as _impl

        BACKEND = "numba"
    except ImportError:
        from . import _kernels_np as _impl

        BACKEND = "numpy"

sh2_violation = _impl.sh2_violation
sh3_violation = _impl.sh3_violation
sh4_violation = _impl.sh4_violation
scan_free_cells = _impl.scan_free_cells
count_free_cells = _impl.count_free_cells

__all__ = [
    "BACKEND",
    "count_free_cells",
    "scan_free_cells",
    "sh2_violation",
    "sh3_violation",
    "sh4_violation",
]
