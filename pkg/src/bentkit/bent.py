"""Bent-ness testing, dual functions, affine equivalence, 2-flat statistics.

A function is bent when its arity is even and every Walsh value is +-2^(n/2).
The dual reads the signs of the spectrum.  Affine maps act by
g(x) = f(Mx + translation) + <functional, x> + constant with M invertible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .core import BooleanFunction, ResourceCapError, _check_arity
from .geometry import gaussian_binomial
from .transforms import walsh_fast

FLAT_ARITY_CAP = 12
_FLAT_CACHE_ARITY = 8


def is_bent(f: BooleanFunction) -> bool:
    """True iff n is even and the whole spectrum is +-2^(n/2)."""
    if f.n % 2:
        return False
    target = 1 << (f.n // 2)
    return all(abs(v) == target for v in walsh_fast(f).values)


def dual_bent(b: BooleanFunction) -> BooleanFunction:
    """The bent function g with W_b(y) = 2^(n/2) * (-1)^g(y)."""
    if b.n % 2:
        raise ValueError("not bent")
    target = 1 << (b.n // 2)
    table = 0
    for y, v in enumerate(walsh_fast(b).values):
        if v == -target:
            table |= 1 << y
        elif v != target:
            raise ValueError("not bent")
    return BooleanFunction(b.n, table)


def matrix_rank(cols: Sequence[int]) -> int:
    """Rank over F_2 of the matrix whose columns are the given bit vectors."""
    basis: dict[int, int] = {}
    for vec in cols:
        v = int(vec)
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                break
            v ^= basis[lead]
    return len(basis)


@dataclass(frozen=True)
class AffineMap:
    """Invertible affine substitution plus an affine output term.

    ``cols[i]`` is the matrix column multiplying input bit i, packed as an
    n-bit int over the output bits.
    """

    n: int
    cols: tuple[int, ...]
    translation: int
    functional: int
    constant: int

    def __post_init__(self) -> None:
        _check_arity(self.n)
        if len(self.cols) != self.n:
            raise ValueError(f"need {self.n} matrix columns, got {len(self.cols)}")
        top = 1 << self.n
        for c in self.cols:
            if not 0 <= c < top:
                raise ValueError(f"matrix column {c:#x} out of range for n={self.n}")
        if not 0 <= self.translation < top:
            raise ValueError("translation out of range")
        if not 0 <= self.functional < top:
            raise ValueError("functional vector out of range")
        if self.constant not in (0, 1):
            raise ValueError("constant must be a bit")
        if matrix_rank(self.cols) != self.n:
            raise ValueError("matrix is singular")

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(n, tuple(1 << i for i in range(n)), 0, 0, 0)


def apply_affine(f: BooleanFunction, t: AffineMap) -> BooleanFunction:
    """g(x) = f(Mx + translation) + <functional, x> + constant."""
    if f.n != t.n:
        raise ValueError(f"arity mismatch: function n={f.n}, map n={t.n}")
    table = 0
    for x in range(f.size):
        y = t.translation
        rest = x
        while rest:
            low = rest & -rest
            y ^= t.cols[low.bit_length() - 1]
            rest ^= low
        bit = f.bit(y) ^ ((t.functional & x).bit_count() & 1) ^ t.constant
        table |= bit << x
    return BooleanFunction(f.n, table)


def random_invertible(n: int, seed: Union[int, random.Random, None] = None) -> AffineMap:
    """Uniform invertible map for a fixed seed; rejection-samples the matrix."""
    _check_arity(n)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        cols = tuple(rng.getrandbits(n) for _ in range(n))
        if matrix_rank(cols) == n:
            break
    return AffineMap(
        n,
        cols,
        rng.getrandbits(n),
        rng.getrandbits(n),
        rng.getrandbits(1),
    )


def affine_group_size_log2(n: int) -> float:
    """log2 of |GL(n,2)| * 2^n * 2^(n+1): matrix, translation, affine term."""
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    gl = 1
    for i in range(n):
        gl *= (1 << n) - (1 << i)
    return math.log2(gl * (1 << n) * (1 << (n + 1)))


def _canonical_pairs(n: int) -> Iterator[tuple[int, int]]:
    # each 2-dim subspace once, keyed by its two smallest nonzero members;
    # u < v forces u^v to be the largest of the three
    top = 1 << n
    for u in range(1, top):
        for v in range(u + 1, top):
            if v < (u ^ v):
                yield (u, v)


def two_flats(n: int) -> Iterator[tuple[int, int, int, int]]:
    """Every 2-dimensional affine flat once, as its four points.

    The first point is the flat's minimal-index member.
    """
    _check_arity(n)
    if n < 2:
        raise ValueError(f"2-dimensional flats need n >= 2, got {n}")
    for u, v in _canonical_pairs(n):
        w = u ^ v
        for t in range(1 << n):
            if t < (t ^ u) and t < (t ^ v) and t < (t ^ w):
                yield (t, t ^ u, t ^ v, t ^ w)


@lru_cache(maxsize=4)
def _flat_table(n: int) -> tuple[tuple[int, int, int, int], ...]:
    return tuple(two_flats(n))


@dataclass(frozen=True)
class FlatSumDistribution:
    """Counts of 2-flats by their sign sum; sums live in {-4,-2,0,2,4}."""

    n: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return gaussian_binomial(self.n, 2) << (self.n - 2)


def two_flat_sum_distribution(b: BooleanFunction) -> FlatSumDistribution:
    """Distribution of sum of (-1)^b over every 2-dimensional affine flat."""
    if b.n < 2:
        raise ValueError(f"2-dimensional flats need n >= 2, got {b.n}")
    if b.n > FLAT_ARITY_CAP:
        raise ResourceCapError(
            f"flat enumeration at arity {b.n} exceeds the cap of {FLAT_ARITY_CAP}"
        )
    bits = b.bits()
    counts = {s: 0 for s in (-4, -2, 0, 2, 4)}
    flats = _flat_table(b.n) if b.n <= _FLAT_CACHE_ARITY else two_flats(b.n)
    for p0, p1, p2, p3 in flats:
        counts[4 - 2 * (bits[p0] + bits[p1] + bits[p2] + bits[p3])] += 1
    return FlatSumDistribution(b.n, counts)
