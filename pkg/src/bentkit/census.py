"""Exhaustive bent-function census at desk scale.

Two independent methods: brute force over every truth table, and search over
normal forms supported on the ball B_{n/2}.  Both stream results in ascending
truth-table order for any shard count.  Hard caps keep infeasible arities
from hanging: the brute-force space is 2^(2^n) and the degree-restricted
space is 2^42 already at n=6.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .core import BooleanFunction, ResourceCapError
from .geometry import ball_points
from .transforms import degree_space_log2

NAIVE_ARITY_CAP = 4
DEGREE_EXPONENT_CAP = 24
_CHUNK = 1 << 16


@dataclass(frozen=True)
class CensusResult:
    n: int
    method: str
    count: int
    elapsed: float
    functions: Optional[tuple[BooleanFunction, ...]]


def _batch_walsh_abs_ok(bit_rows: np.ndarray, n: int) -> np.ndarray:
    """Boolean mask of rows whose spectrum is +-2^(n/2) everywhere."""
    a = 1 - 2 * bit_rows.astype(np.int32)
    size = 1 << n
    h = 1
    while h < size:
        view = a.reshape(a.shape[0], -1, 2, h)
        top = view[:, :, 0, :].copy()
        view[:, :, 0, :] += view[:, :, 1, :]
        view[:, :, 1, :] = top - view[:, :, 1, :]
        h *= 2
    return np.all(np.abs(a) == (1 << (n // 2)), axis=1)


def _table_bits(tables: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    return ((tables[:, None] >> np.arange(size, dtype=np.uint32)[None, :]) & 1).astype(
        np.uint8
    )


def _bits_to_tables(bit_rows: np.ndarray) -> np.ndarray:
    weights = (np.int64(1) << np.arange(bit_rows.shape[1], dtype=np.int64))
    return bit_rows.astype(np.int64) @ weights


def _bent_tables_in_range(n: int, lo: int, hi: int) -> list[int]:
    """Truth-table ints of the bent functions with lo <= table < hi, ascending."""
    out: list[int] = []
    for start in range(lo, hi, _CHUNK):
        tables = np.arange(start, min(start + _CHUNK, hi), dtype=np.uint32)
        bits = _table_bits(tables, n)
        keep = _batch_walsh_abs_ok(bits, n)
        out.extend(int(t) for t in tables[keep])
    return out


def _anf_bit_rows(n: int, lo: int, hi: int) -> np.ndarray:
    """Normal-form tables of the candidate range as bit rows.

    For n >= 4 candidate k sets ball point j wherever bit j of k is set (the
    degree bound for bent functions).  n=2 is special: bent functions there
    all have degree 2, so the top monomial is pinned to 1 and the 2^3
    candidates range over the affine part.
    """
    size = 1 << n
    count = hi - lo
    rows = np.zeros((count, size), dtype=np.uint8)
    candidates = np.arange(lo, hi, dtype=np.uint32)
    if n == 2:
        for j in range(3):
            rows[:, j] = (candidates >> j) & 1
        rows[:, 3] = 1
        return rows
    points = ball_points(n, n // 2).points
    for j, p in enumerate(points):
        rows[:, p] = ((candidates >> j) & 1).astype(np.uint8)
    return rows


def _moebius_rows(bit_rows: np.ndarray) -> np.ndarray:
    a = bit_rows.copy()
    size = a.shape[1]
    h = 1
    while h < size:
        view = a.reshape(a.shape[0], -1, 2, h)
        view[:, :, 1, :] ^= view[:, :, 0, :]
        h *= 2
    return a


def _bent_tables_from_anf_range(n: int, lo: int, hi: int) -> list[int]:
    """Truth-table ints of bent functions among candidates lo..hi (unsorted)."""
    out: list[int] = []
    for start in range(lo, hi, _CHUNK):
        anf = _anf_bit_rows(n, start, min(start + _CHUNK, hi))
        truth = _moebius_rows(anf)
        keep = _batch_walsh_abs_ok(truth, n)
        out.extend(int(t) for t in _bits_to_tables(truth[keep]))
    return out


def _check_even(n: int) -> None:
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if n % 2:
        raise ValueError(f"bent functions need even arity, got {n}")


def _shard_ranges(total: int, shards: int) -> list[tuple[int, int]]:
    if shards < 1:
        raise ValueError(f"shard count must be >= 1, got {shards}")
    bounds = [total * k // shards for k in range(shards + 1)]
    return [(bounds[k], bounds[k + 1]) for k in range(shards)]


def _run_sharded(worker, n: int, total: int, shards: int, jobs: int) -> list[int]:
    ranges = _shard_ranges(total, shards)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(worker, [n] * len(ranges), *zip(*ranges)))
    else:
        parts = [worker(n, lo, hi) for lo, hi in ranges]
    merged: list[int] = []
    for part in parts:
        merged.extend(part)
    return merged


def enumerate_bent_naive(
    n: int, *, shards: int = 1, jobs: int = 1, include_functions: bool = True
) -> CensusResult:
    """Filter all 2^(2^n) truth tables through the bent test."""
    _check_even(n)
    if n > NAIVE_ARITY_CAP:
        raise ResourceCapError(
            f"brute-force census is capped at n <= {NAIVE_ARITY_CAP} "
            f"(2^(2^n) tables); got n={n}"
        )
    started = time.perf_counter()
    tables = _run_sharded(_bent_tables_in_range, n, 1 << (1 << n), shards, jobs)
    elapsed = time.perf_counter() - started
    functions = tuple(BooleanFunction(n, t) for t in tables) if include_functions else None
    return CensusResult(n, "naive", len(tables), elapsed, functions)


def enumerate_bent_by_degree(
    n: int, *, shards: int = 1, jobs: int = 1, include_functions: bool = True
) -> CensusResult:
    """Search normal forms supported on B_{n/2} and filter by the bent test."""
    _check_even(n)
    exponent = degree_space_log2(n, n // 2)
    if exponent > DEGREE_EXPONENT_CAP:
        raise ResourceCapError(
            f"degree-restricted census needs 2^{exponent} candidates at n={n}, "
            f"over the 2^{DEGREE_EXPONENT_CAP} cap"
        )
    started = time.perf_counter()
    tables = _run_sharded(_bent_tables_from_anf_range, n, 1 << exponent, shards, jobs)
    tables.sort()
    elapsed = time.perf_counter() - started
    functions = tuple(BooleanFunction(n, t) for t in tables) if include_functions else None
    return CensusResult(n, "degree", len(tables), elapsed, functions)


@lru_cache(maxsize=None)
def bent_count(n: int, method: str = "naive") -> int:
    """Cached census count for (n, method); method is 'naive' or 'degree'."""
    if method == "naive":
        return enumerate_bent_naive(n, include_functions=False).count
    if method == "degree":
        return enumerate_bent_by_degree(n, include_functions=False).count
    raise ValueError(f"unknown census method {method!r}")
