"""Timing comparison for the box-counting kernels.

Run directly:

    python3 benchmarks/bench_kernels.py

With numba available both backends are timed against each other and the
results are cross-checked; under WEYLDIM_DISABLE_NUMBA=1 only the numpy
fallback is timed.
"""
from __future__ import annotations

import time

import numpy as np

from weyldim.kernels import (
    USING_NUMBA,
    _classify_box_nb,
    _classify_box_np,
    _count_not_dominated_nb,
    _count_not_dominated_np,
    block_sum_matrix,
    box_vectors,
)


def timed(fn, repeats: int = 3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def workload(sizes: tuple[int, ...], r: tuple[int, ...], leaders: int, seed: int):
    rng = np.random.default_rng(seed)
    V = box_vectors(sizes, r)
    BS = block_sum_matrix(V, sizes)
    L = rng.integers(0, 3, size=(leaders, sum(sizes)), dtype=np.int64)
    SL = rng.integers(0, 2, size=(leaders, len(sizes)), dtype=np.int64)
    return V, BS, L, SL, np.asarray(r, dtype=np.int64)


CASES = [
    ((2, 2), (12, 12), 6),
    ((4,), (18,), 8),
    ((2, 2), (20, 20), 10),
    ((3, 3), (10, 10), 10),
]


def main() -> None:
    print(f"numba active: {USING_NUMBA}")
    if USING_NUMBA:
        # trigger jit compilation outside the timed region
        V, BS, L, SL, r = workload((1, 1), (2, 2), 2, 0)
        _count_not_dominated_nb(V, L)
        _classify_box_nb(V, BS, L, SL, r)
    head = f"{'sizes':>8} {'bounds':>10} {'rows':>8} {'kernel':>14}"
    head += f" {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(head)
    for sizes, r, leaders in CASES:
        V, BS, L, SL, rr = workload(sizes, r, leaders, seed=42)
        rows = V.shape[0]
        for name, np_fn, nb_fn in (
            (
                "not_dominated",
                lambda: _count_not_dominated_np(V, L),
                lambda: _count_not_dominated_nb(V, L),
            ),
            (
                "classify_box",
                lambda: _classify_box_np(V, BS, L, SL, rr),
                lambda: _classify_box_nb(V, BS, L, SL, rr),
            ),
        ):
            got_np, t_np = timed(np_fn)
            line = f"{str(sizes):>8} {str(r):>10} {rows:>8} {name:>14} {t_np*1e3:>8.2f}ms"
            if USING_NUMBA:
                got_nb, t_nb = timed(nb_fn)
                if tuple(np.atleast_1d(got_np)) != tuple(np.atleast_1d(got_nb)):
                    raise SystemExit(f"backend mismatch on {name}: {got_np} vs {got_nb}")
                line += f" {t_nb*1e3:>8.2f}ms {t_np/t_nb:>7.1f}x"
            else:
                line += f" {'-':>10} {'-':>8}"
            print(line)


if __name__ == "__main__":
    main()
