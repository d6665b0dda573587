"""Boundary words of the disk-surgery sequence, via a rotation-gap model.

For summand parameters (p1, q1) and (p2, q2) the i-th word in the
sequence is x^p2 y^g1 x^p2 y^g2 ... x^p2 y^gi, where (g1, ..., gi) are
the circular gaps cut on Z/p1 by the first i multiples of q1.  Only p2
enters the x-blocks; q2 is carried for classification interoperability.

The sequence starts at x^p2 y^p1 and ends at (x^p2 y)^p1, which is a
power of the primitive element x^p2 y.
"""

from dataclasses import dataclass
from math import gcd

from . import fgroup


@dataclass(frozen=True)
class SplittingParams:
    """Coprime lens parameters (p1, q1) and (p2, q2), with p >= 2 and
    1 <= q < p on each side."""

    p1: int
    q1: int
    p2: int
    q2: int = 1

    def __post_init__(self):
        for p, q, side in ((self.p1, self.q1, 1), (self.p2, self.q2, 2)):
            if p < 2:
                raise ValueError(f"p{side} must be at least 2, got {p}")
            if not 1 <= q < p:
                raise ValueError(f"require 1 <= q{side} < p{side}, got q{side}={q}")
            if gcd(p, q) != 1:
                raise ValueError(f"p{side}={p} and q{side}={q} are not coprime")


def gap_pattern(params: SplittingParams, i: int) -> tuple[int, ...]:
    """Circular gaps of the points {0, q1, 2*q1, ..., (i-1)*q1} mod p1,
    read from 0 in increasing order.

    The gaps are positive, sum to p1, and take at most three distinct
    values (three-distance theorem).
    """
    if not 1 <= i <= params.p1:
        raise ValueError(f"index must lie in 1..{params.p1}, got {i}")
    points = sorted(j * params.q1 % params.p1 for j in range(i))
    gaps = [points[k + 1] - points[k] for k in range(i - 1)]
    gaps.append(params.p1 - points[-1])
    return tuple(gaps)


def surgery_word(params: SplittingParams, i: int) -> str:
    """The canonical cyclic word x^p2 y^g1 ... x^p2 y^gi for the gap
    pattern at index i.  For i = 1 this is x^p2 y^p1."""
    x_block = "x" * params.p2
    raw = "".join(x_block + "y" * g for g in gap_pattern(params, i))
    return fgroup.cyclic_canonical(raw)


def surgery_sequence(params: SplittingParams) -> list[str]:
    """The full word sequence for i = 1..p1; the last entry equals
    (x^p2 y)^p1."""
    return [surgery_word(params, i) for i in range(1, params.p1 + 1)]
