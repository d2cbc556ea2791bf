"""Degree-bounded reconstruction from Hamming balls, and the face-restriction
implication checker relating spectra on a face to coset sums on its dual.

A function of degree <= r is determined by its values on the ball B_r: points
are filled in by increasing weight, each new value chosen so the normal-form
coefficient above weight r vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BooleanFunction
from .geometry import (
    Ball,
    FaceMask,
    ball_points,
    coset_spectrum,
    dual_face,
    subcube_points,
)
from .transforms import degree, walsh_fast


@dataclass(frozen=True)
class BallAssignment:
    """Bits assigned on the ball B_r, listed in (weight, index) point order."""

    n: int
    r: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = len(self.ball().points)
        if len(self.values) != expected:
            raise ValueError(
                f"ball of radius {self.r} in n={self.n} has {expected} points, "
                f"got {len(self.values)} values"
            )
        for v in self.values:
            if v not in (0, 1):
                raise ValueError(f"assignment entries must be bits, got {v!r}")

    def ball(self) -> Ball:
        return ball_points(self.n, self.r)

    def as_dict(self) -> dict[int, int]:
        """Point index -> assigned bit."""
        return dict(zip(self.ball().points, self.values))

    @classmethod
    def from_function(cls, f: BooleanFunction, r: int) -> "BallAssignment":
        """Restriction of f to the ball B_r."""
        pts = ball_points(f.n, r).points
        return cls(f.n, r, tuple(f.bit(p) for p in pts))


def reconstruct_from_ball(a: BallAssignment) -> BooleanFunction:
    """The unique function of degree <= r extending the ball assignment.

    Points y of weight above r get f(y) = XOR of f over the proper subcube
    below y, which forces the normal-form coefficient at y to zero.
    """
    size = 1 << a.n
    bits = [0] * size
    for point, value in a.as_dict().items():
        bits[point] = value
    order = sorted(range(size), key=lambda p: (p.bit_count(), p))
    for y in order:
        if y.bit_count() <= a.r:
            continue
        acc = 0
        for x in subcube_points(FaceMask(a.n, y)):
            if x != y:
                acc ^= bits[x]
        bits[y] = acc
    table = 0
    for k, v in enumerate(bits):
        table |= v << k
    result = BooleanFunction(a.n, table)
    assert degree(result) <= a.r
    assert BallAssignment.from_function(result, a.r) == a
    return result


def lemma1_premise(f: BooleanFunction, g: BooleanFunction, gamma: FaceMask) -> bool:
    """True iff the spectra of f and g agree at every point of the face."""
    if f.n != g.n:
        raise ValueError(f"arity mismatch: {f.n} != {g.n}")
    if gamma.n != f.n:
        raise ValueError(f"arity mismatch: function n={f.n}, mask n={gamma.n}")
    wf = walsh_fast(f).values
    wg = walsh_fast(g).values
    return all(wf[y] == wg[y] for y in subcube_points(gamma))


def lemma1_conclusion(f: BooleanFunction, g: BooleanFunction, gamma: FaceMask) -> bool:
    """True iff f and g have equal sums on every coset of the dual face."""
    if f.n != g.n:
        raise ValueError(f"arity mismatch: {f.n} != {g.n}")
    if gamma.n != f.n:
        raise ValueError(f"arity mismatch: function n={f.n}, mask n={gamma.n}")
    dual = dual_face(gamma)
    return coset_spectrum(f, dual) == coset_spectrum(g, dual)


def check_lemma1(f: BooleanFunction, g: BooleanFunction, gamma: FaceMask) -> dict[str, bool]:
    """Evaluate both sides of the implication: spectra equal on a face implies
    equal coset sums on the dual face.  ``holds`` must always be true."""
    premise = lemma1_premise(f, g, gamma)
    conclusion = lemma1_conclusion(f, g, gamma)
    return {
        "premise": premise,
        "conclusion": conclusion,
        "holds": (not premise) or conclusion,
    }
