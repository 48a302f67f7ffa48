#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Covers the two hot paths: per-table axiom sweeps (as used by is_valid
and the checkers) and the brute-force candidate scan (as used by the
oracle).  The default forced-mode scan covers a 1M slice of the n=5
space; --full scans all 9.77M candidates.

Usage: python benchmarks/bench_backends.py [--full] [--repeat R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from semiheyting import _kernels_np as knp
from semiheyting import enumerate_tables, forced_skeleton
from semiheyting.construct import FREE

try:
    from semiheyting import _kernels_nb as knb
except ImportError:
    knb = None


def forced_frame(n):
    template = forced_skeleton(n)
    cells = [(i, k) for i in range(n) for k in range(n) if template[i, k] == FREE]
    template[template == FREE] = 0
    rows = np.array([c[0] for c in cells], dtype=np.int64)
    cols = np.array([c[1] for c in cells], dtype=np.int64)
    return template, rows, cols, n ** len(cells)


def pure_frame(n):
    template = np.zeros((n, n), dtype=np.int64)
    rows = np.repeat(np.arange(n), n).astype(np.int64)
    cols = np.tile(np.arange(n), n).astype(np.int64)
    return template, rows, cols, n ** (n * n)


def time_call(fn, repeat):
    best = float("inf")
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def sweep_tables(impl, tables):
    bad = 0
    for t in tables:
        if (
            impl.sh4_violation(t) >= 0
            or impl.sh2_violation(t) >= 0
            or impl.sh3_violation(t) >= 0
        ):
            bad += 1
    return bad


def chunked_count(impl, frame, stop, chunk=1 << 16):
    template, rows, cols, _ = frame
    total = 0
    for start in range(0, stop, chunk):
        total += int(
            impl.count_free_cells(template, rows, cols, start, min(start + chunk, stop))
        )
    return total


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="scan the whole n=5 space")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args()

    tables = list(enumerate_tables(5))
    pure3 = pure_frame(3)
    forced5 = forced_frame(5)
    scan_stop = forced5[3] if args.full else 1 << 20

    benches = [
        (f"axiom sweep over {len(tables)} tables (n=5)",
         lambda impl: sweep_tables(impl, tables)),
        (f"pure scan n=3 ({pure3[3]} candidates)",
         lambda impl: chunked_count(impl, pure3, pure3[3])),
        (f"forced scan n=5 ({scan_stop} of {forced5[3]} candidates)",
         lambda impl: chunked_count(impl, forced5, scan_stop)),
    ]

    backends = [("numpy", knp)]
    if knb is not None:
        start = time.perf_counter()
        sweep_tables(knb, tables[:1])
        chunked_count(knb, pure3, 16)
        print(f"numba warmup (jit compile / cache load): "
              f"{time.perf_counter() - start:.2f}s")
        backends.insert(0, ("numba", knb))
    else:
        print("numba unavailable, benchmarking the numpy fallback only")

    width = max(len(name) for name, _ in benches)
    header = f"{'benchmark':<{width}}  " + "".join(
        f"{name:>12}" for name, _ in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, bench in benches:
        times = []
        values = []
        for _, impl in backends:
            best, value = time_call(lambda: bench(impl), args.repeat)
            times.append(best)
            values.append(value)
        assert len(set(values)) == 1, f"backends disagree on {name}: {values}"
        row = f"{name:<{width}}  " + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
