"""Walsh-Hadamard and Moebius transforms, algebraic degree, convolution.

All arithmetic is exact: transforms run on Python ints or on int64 arrays
whose magnitudes are proven to fit.  ``walsh_fast`` is the O(n 2^n) butterfly;
``walsh_naive`` evaluates the defining double sum directly and serves as the
independent oracle.  ``convolve_pm`` is likewise the direct sum, never routed
through the transform, so ``check_restriction_identity`` really compares two
different computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence, Union, overload

import numpy as np

from .core import BooleanFunction, ResourceCapError
from .geometry import FaceMask

NAIVE_ARITY_CAP = 12
# pure-python butterflies beat numpy call overhead below this arity
_NUMPY_CUTOVER = 7

IntegerVector = list[int]


@dataclass(frozen=True)
class WalshSpectrum:
    """Walsh-Hadamard spectrum: values[index(y)] = sum_x (-1)^(f(x) + <x,y>)."""

    n: int
    values: tuple[int, ...]


def _hadamard_in_place(a: list[int]) -> list[int]:
    # stage i mixes index bit i-1; h runs 1, 2, 4, ...
    size = len(a)
    h = 1
    while h < size:
        for start in range(0, size, h * 2):
            for j in range(start, start + h):
                x = a[j]
                y = a[j + h]
                a[j] = x + y
                a[j + h] = x - y
        h *= 2
    return a


def _hadamard_numpy(a: np.ndarray) -> np.ndarray:
    # mutates its argument; callers pass a freshly built array
    size = a.shape[0]
    h = 1
    while h < size:
        view = a.reshape(-1, 2, h)
        top = view[:, 0, :].copy()
        view[:, 0, :] += view[:, 1, :]
        view[:, 1, :] = top - view[:, 1, :]
        h *= 2
    return a


def hadamard_transform(values: Sequence[int]) -> IntegerVector:
    """Integer Hadamard transform of a vector of length 2^n (exact).

    Applying it twice returns 2^n times the input.
    """
    size = len(values)
    if size == 0 or size & (size - 1):
        raise ValueError(f"vector length must be a power of two, got {size}")
    work = [int(v) for v in values]
    peak = max((abs(v) for v in work), default=0)
    # int64 is safe when size * max|v| cannot reach 2^62
    if size >= (1 << _NUMPY_CUTOVER) and peak < (1 << 62) // max(size, 1):
        out = _hadamard_numpy(np.array(work, dtype=np.int64))
        return [int(v) for v in out]
    return _hadamard_in_place(work)


def _sign_vector_numpy(f: BooleanFunction) -> np.ndarray:
    nbytes = max(1, f.size // 8)
    raw = np.frombuffer(f.table.to_bytes(nbytes, "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[: f.size]
    return (1 - 2 * bits.astype(np.int64))


def _signs(f: BooleanFunction) -> list[int]:
    table = f.table
    return [1 - 2 * ((table >> k) & 1) for k in range(f.size)]


def walsh_fast(f: BooleanFunction) -> WalshSpectrum:
    """Walsh-Hadamard spectrum via the in-place butterfly, O(n 2^n)."""
    if f.n < _NUMPY_CUTOVER:
        return WalshSpectrum(f.n, tuple(_hadamard_in_place(_signs(f))))
    out = _hadamard_numpy(_sign_vector_numpy(f))
    return WalshSpectrum(f.n, tuple(int(v) for v in out))


@lru_cache(maxsize=8)
def _character_matrix(n: int) -> np.ndarray:
    # C[y, x] = (-1)^<x, y>
    idx = np.arange(1 << n, dtype=np.uint32)
    parity = np.bitwise_count(idx[:, None] & idx[None, :]).astype(np.int8) & 1
    return (1 - 2 * parity).astype(np.int8)


def walsh_naive(f: BooleanFunction) -> WalshSpectrum:
    """Walsh-Hadamard spectrum by direct evaluation of the defining double sum.

    O(4^n) work; the independent oracle for walsh_fast.
    """
    if f.n > NAIVE_ARITY_CAP:
        raise ResourceCapError(
            f"naive transform is O(4^n); arity {f.n} exceeds the cap of {NAIVE_ARITY_CAP}"
        )
    signs = _sign_vector_numpy(f)
    values = _character_matrix(f.n) @ signs
    return WalshSpectrum(f.n, tuple(int(v) for v in values))


@lru_cache(maxsize=32)
def _moebius_stage_masks(n: int) -> tuple[int, ...]:
    # mask i selects the table positions whose index has bit i clear
    size = 1 << n
    masks = []
    for i in range(n):
        shift = 1 << i
        m = (1 << shift) - 1
        span = shift * 2
        while span < size:
            m |= m << span
            span *= 2
        masks.append(m)
    return tuple(masks)


def _moebius_table(table: int, n: int) -> int:
    for i, mask in enumerate(_moebius_stage_masks(n)):
        table ^= (table & mask) << (1 << i)
    return table


@overload
def moebius(t: BooleanFunction) -> BooleanFunction: ...
@overload
def moebius(t: Sequence[int]) -> list[int]: ...


def moebius(t: Union[BooleanFunction, Sequence[int]]):
    """Moebius transform: output[y] = XOR of t[x] over x below y coordinatewise.

    Maps a truth table to its algebraic normal form and back (involution).
    Accepts a BooleanFunction or a raw bit table of length 2^n.
    """
    if isinstance(t, BooleanFunction):
        return BooleanFunction(t.n, _moebius_table(t.table, t.n))
    bits = list(t)
    size = len(bits)
    if size == 0 or size & (size - 1):
        raise ValueError(f"bit table length must be a power of two, got {size}")
    table = 0
    for k, v in enumerate(bits):
        if v not in (0, 1):
            raise ValueError(f"bit table entries must be bits, got {v!r}")
        table |= v << k
    out = _moebius_table(table, size.bit_length() - 1)
    return [(out >> k) & 1 for k in range(size)]


def degree(f: BooleanFunction) -> int:
    """Algebraic degree: largest monomial size in the normal form; 0 for constants."""
    anf = moebius(f).table
    best = 0
    while anf:
        low = anf & -anf
        best = max(best, (low.bit_length() - 1).bit_count())
        anf ^= low
    return best


def degree_space_log2(n: int, d: int) -> int:
    """log2 of the number of functions of degree <= d on F_2^n."""
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if not 0 <= d <= n:
        raise ValueError(f"degree bound must satisfy 0 <= d <= {n}, got {d}")
    return sum(comb(n, i) for i in range(d + 1))


def convolve_pm(f: BooleanFunction, g: Sequence[int]) -> IntegerVector:
    """Convolution of the sign vector of f with g: out[z] = sum_x (-1)^f(x) g[z^x].

    Computed as the direct sum (one shifted add per point of the domain).
    """
    size = f.size
    if len(g) != size:
        raise ValueError(f"arity mismatch: function size {size}, vector length {len(g)}")
    vec = [int(v) for v in g]
    peak = max((abs(v) for v in vec), default=0)
    if peak < (1 << 62) // max(size, 1):
        arr = np.array(vec, dtype=np.int64)
        idx = np.arange(size)
        out = np.zeros(size, dtype=np.int64)
        table = f.table
        for x in range(size):
            sign = 1 - 2 * ((table >> x) & 1)
            out += sign * arr[idx ^ x]
        return [int(v) for v in out]
    out_py = [0] * size
    table = f.table
    for x in range(size):
        sign = 1 - 2 * ((table >> x) & 1)
        for z in range(size):
            out_py[z] += sign * vec[z ^ x]
    return out_py


def check_restriction_identity(f: BooleanFunction, gamma: FaceMask) -> bool:
    """Exact check that convolving (-1)^f with the dual-face indicator equals
    the doubly-transformed, face-masked spectrum divided by 2^dim.

    The left side goes through convolve_pm, the right side through two
    Hadamard transforms; both are exact integers.
    """
    if f.n != gamma.n:
        raise ValueError(f"arity mismatch: function n={f.n}, mask n={gamma.n}")
    size = f.size
    dual_indicator = [1 if (x & gamma.mask) == 0 else 0 for x in range(size)]
    lhs = convolve_pm(f, dual_indicator)

    spectrum = hadamard_transform(_signs(f))
    masked = [
        spectrum[y] if (y & ~gamma.mask) == 0 else 0 for y in range(size)
    ]
    doubled = hadamard_transform(masked)
    divisor = 1 << gamma.dim
    rhs = []
    for v in doubled:
        q, rem = divmod(v, divisor)
        if rem:
            return False
        rhs.append(q)
    return lhs == rhs
