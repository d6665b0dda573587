"""Counting genus-two Heegaard surfaces of a connected sum of two
summands (lens spaces or S^2 x S^1) and flagging the symmetric
splitting.

The surface count is one exactly when some summand admits an
orientation-preserving homeomorphism interchanging the sides of its
genus-one splitting: always for S^2 x S^1, and for a lens space L(p, q)
exactly when q^2 = 1 (mod p).

The symmetric-splitting flag uses the classical oriented homeomorphism
classification of lens spaces, L(p, q) = L(p', q') iff p = p' and
q' = q or q q' = 1 (mod p); this criterion is standard material, not
established here.
"""

from dataclasses import dataclass
from math import gcd
from typing import Union


@dataclass(frozen=True)
class Lens:
    """A genuine lens space L(p, q): p >= 2, 1 <= q < p, gcd(p, q) = 1.
    The degenerate cases L(1, 0) and L(0, 1) are excluded."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if not 1 <= self.q < self.p:
            raise ValueError(f"require 1 <= q < p, got q={self.q}, p={self.p}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} are not coprime")

    def __str__(self) -> str:
        return f"lens:{self.p},{self.q}"


@dataclass(frozen=True)
class S2xS1:
    """The S^2 x S^1 summand."""

    def __str__(self) -> str:
        return "s2xs1"


Summand = Union[Lens, S2xS1]


def parse_summand(text: str) -> Summand:
    """Parse "lens:p,q" or "s2xs1"."""
    if text == "s2xs1":
        return S2xS1()
    if text.startswith("lens:"):
        body = text[len("lens:") :]
        parts = body.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected lens:p,q, got {text!r}")
        try:
            p, q = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"expected integer lens parameters, got {text!r}")
        return Lens(p, q)
    raise ValueError(f"unknown summand {text!r}; use lens:p,q or s2xs1")


def genus_one_reversible(summand: Summand) -> bool:
    """Whether the summand's genus-one splitting admits a side-swapping
    orientation-preserving homeomorphism: true for S^2 x S^1, and for
    L(p, q) exactly when q^2 = 1 (mod p)."""
    if isinstance(summand, S2xS1):
        return True
    return summand.q * summand.q % summand.p == 1


def surface_count(m1: Summand, m2: Summand) -> int:
    """Number of genus-two Heegaard surfaces of m1 # m2 up to
    homeomorphism: 1 when some summand is reversible, else 2."""
    return 1 if genus_one_reversible(m1) or genus_one_reversible(m2) else 2


def oriented_lens_homeomorphic(a: Lens, b: Lens) -> bool:
    """Oriented homeomorphism of lens spaces: equal p and q' = q or
    q q' = 1 (mod p)."""
    return a.p == b.p and (a.q == b.q or a.q * b.q % a.p == 1)


@dataclass(frozen=True)
class SplittingDescriptor:
    """One genus-two splitting of the connected sum: its case tag
    ("1a" or "1b" for lens # lens, "2" with an S^2 x S^1 summand) and
    whether it is the symmetric one."""

    case: str
    symmetric: bool
    summands: tuple[Summand, Summand]


def splittings(m1: Summand, m2: Summand) -> list[SplittingDescriptor]:
    """Descriptors of the genus-two splittings of m1 # m2, one per
    Heegaard surface.

    With an S^2 x S^1 summand there is a single case-2 splitting.  For
    two lens summands, a symmetric (case 1b) splitting exists exactly
    when the summands are oriented-homeomorphic, and then exactly one
    descriptor is symmetric.
    """
    pair = (m1, m2)
    if isinstance(m1, S2xS1) or isinstance(m2, S2xS1):
        return [SplittingDescriptor("2", False, pair)]
    count = surface_count(m1, m2)
    if oriented_lens_homeomorphic(m1, m2):
        out = [SplittingDescriptor("1b", True, pair)]
        if count == 2:
            out.append(SplittingDescriptor("1a", False, pair))
        return out
    return [SplittingDescriptor("1a", False, pair) for _ in range(count)]
