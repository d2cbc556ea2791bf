"""Coordinate faces of the hypercube, their cosets, and Hamming balls.

A face is the subcube Gamma(mask) = {x : x AND NOT mask = 0}: the set bits of
``mask`` are the free coordinates, every face contains the origin.  Cosets of
a face are keyed by their minimal-index member, which is the point with all
free coordinates cleared.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import BooleanFunction, Point, ResourceCapError, _as_index, _check_arity

_PATTERN_DIM_CAP = 4


@dataclass(frozen=True)
class FaceMask:
    """Subcube of F_2^n spanned by the coordinates set in ``mask``."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_arity(self.n)
        if not isinstance(self.mask, int) or isinstance(self.mask, bool):
            raise ValueError(f"mask must be an int, got {self.mask!r}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @property
    def dim(self) -> int:
        return self.mask.bit_count()

    @property
    def size(self) -> int:
        return 1 << self.dim


def _submasks_ascending(mask: int) -> Iterator[int]:
    # enumerates all s with s AND NOT mask = 0 in increasing order
    s = 0
    while True:
        yield s
        s = (s - mask) & mask
        if s == 0:
            return


def subcube_points(m: FaceMask) -> list[int]:
    """All points of Gamma(m), ascending by index."""
    return list(_submasks_ascending(m.mask))


def dual_face(m: FaceMask) -> FaceMask:
    """The face whose points are orthogonal to every point of Gamma(m)."""
    return FaceMask(m.n, ~m.mask & ((1 << m.n) - 1))


def coset_representative(m: FaceMask, z: int) -> int:
    """Minimal-index member of the coset z + Gamma(m)."""
    if not 0 <= z < (1 << m.n):
        raise ValueError(f"point index {z} out of range for n={m.n}")
    return z & ~m.mask


def coset_sum(f: BooleanFunction, m: FaceMask, z: Point) -> int:
    """Sum of (-1)^f over the coset z + Gamma(m)."""
    if f.n != m.n:
        raise ValueError(f"arity mismatch: function n={f.n}, mask n={m.n}")
    base = _as_index(f, z)
    table = f.table
    total = 0
    for s in _submasks_ascending(m.mask):
        total += 1 - 2 * ((table >> (base ^ s)) & 1)
    return total


def coset_spectrum(f: BooleanFunction, m: FaceMask) -> dict[int, int]:
    """Coset sums of every coset of Gamma(m), keyed by minimal-index representative."""
    if f.n != m.n:
        raise ValueError(f"arity mismatch: function n={f.n}, mask n={m.n}")
    complement = ~m.mask & ((1 << m.n) - 1)
    return {rep: coset_sum(f, m, rep) for rep in _submasks_ascending(complement)}


@dataclass(frozen=True)
class Ball:
    """Hamming ball B_r: all points of weight <= r, sorted by (weight, index)."""

    n: int
    r: int
    points: tuple[int, ...]


def ball_points(n: int, r: int) -> Ball:
    _check_arity(n)
    if not 0 <= r <= n:
        raise ValueError(f"radius must satisfy 0 <= r <= {n}, got {r}")
    members = [x for x in range(1 << n) if x.bit_count() <= r]
    members.sort(key=lambda x: (x.bit_count(), x))
    return Ball(n, r, tuple(members))


def covering_coset_count(n: int, r: int, m: FaceMask) -> int:
    """Number of cosets of Gamma(m) that intersect the ball B_r.

    A coset's minimal weight is the weight of its representative (clearing
    free coordinates never adds weight), so this counts representatives of
    weight <= r.
    """
    _check_arity(n)
    if m.n != n:
        raise ValueError(f"arity mismatch: n={n}, mask n={m.n}")
    if not 0 <= r <= n:
        raise ValueError(f"radius must satisfy 0 <= r <= {n}, got {r}")
    complement = ~m.mask & ((1 << n) - 1)
    free = complement.bit_count()
    if free <= 16:
        return sum(1 for rep in _submasks_ascending(complement) if rep.bit_count() <= r)
    # representatives biject with subsets of the complement's bits, weight
    # preserved; count by popcount in chunks to bound memory
    count = 0
    total = 1 << free
    chunk = 1 << 20
    for lo in range(0, total, chunk):
        block = np.arange(lo, min(lo + chunk, total), dtype=np.uint32)
        count += int(np.count_nonzero(np.bitwise_count(block) <= r))
    return count


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional linear subspaces of F_2^n.

    Follows the math.comb convention: k outside [0, n] gives 0,
    negative n is rejected.
    """
    if n < 0 or k < 0:
        raise ValueError(f"need n >= 0 and k >= 0, got k={k}, n={n}")
    if k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (k - i)) - 1
    out, rem = divmod(num, den)
    assert rem == 0
    return out


def coset_value_class_sizes(dim: int) -> dict[int, int]:
    """How many of the 2^(2^dim) sign patterns on a dim-flat reach each sum.

    Brute force over all bit patterns; sums range over {-2^dim, ..., 2^dim}
    in steps of 2.
    """
    if not 0 <= dim <= _PATTERN_DIM_CAP:
        raise ResourceCapError(
            f"pattern enumeration over 2^(2^{dim}) patterns exceeds the dim cap of {_PATTERN_DIM_CAP}"
        )
    size = 1 << dim
    counts = {s: 0 for s in range(-size, size + 1, 2)}
    for pattern in range(1 << size):
        counts[size - 2 * pattern.bit_count()] += 1
    return counts
