"""Lexicographically ordered rational vectors and their monotone multipliers.

The value group is Q^(k): k-tuples of exact rationals compared
lexicographically, first coordinate most significant.  Coordinatewise
multiplication by a vector r defines an endomorphism of Q^(k); the monotone
(order-preserving) multipliers form a monoid whose canonical elements are the
truncations keeping a leading block of coordinates and zeroing the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, LexfanError

LT, EQ, GT = -1, 0, 1


def _to_fractions(entries: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(e) for e in entries)


@dataclass(frozen=True)
class LexVec:
    """An element of Q^(k) under lexicographic order.

    Comparisons, addition and positive rational scaling are all
    order-compatible, so LexVec behaves as an ordered Q-vector space element.
    """

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", _to_fractions(entries))

    @property
    def k(self) -> int:
        return len(self.entries)

    @staticmethod
    def zero(k: int) -> "LexVec":
        return LexVec((0,) * k)

    def _check(self, other: "LexVec") -> None:
        if self.k != other.k:
            raise DimensionMismatch(f"LexVec ranks differ: {self.k} vs {other.k}")

    def __add__(self, other: "LexVec") -> "LexVec":
        self._check(other)
        return LexVec(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "LexVec") -> "LexVec":
        self._check(other)
        return LexVec(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "LexVec":
        return LexVec(-a for a in self.entries)

    def scale(self, q) -> "LexVec":
        q = Fraction(q)
        return LexVec(q * a for a in self.entries)

    __mul__ = scale
    __rmul__ = scale

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    # Tuple comparison of Fractions is exactly lexicographic order.
    def __lt__(self, other):
        self._check(other)
        return self.entries < other.entries

    def __le__(self, other):
        self._check(other)
        return self.entries <= other.entries

    def __gt__(self, other):
        self._check(other)
        return self.entries > other.entries

    def __ge__(self, other):
        self._check(other)
        return self.entries >= other.entries

    def __repr__(self):
        return "LexVec(%s)" % (", ".join(str(a) for a in self.entries))


def lex_cmp(a: LexVec, b: LexVec) -> int:
    """Compare lexicographically; returns -1 (LT), 0 (EQ) or 1 (GT)."""
    if a.k != b.k:
        raise DimensionMismatch(f"LexVec ranks differ: {a.k} vs {b.k}")
    if a.entries < b.entries:
        return LT
    if a.entries == b.entries:
        return EQ
    return GT


@dataclass(frozen=True)
class Multiplier:
    """A coordinatewise multiplier r, acting on LexVecs entry by entry."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", _to_fractions(entries))

    @property
    def k(self) -> int:
        return len(self.entries)

    @staticmethod
    def identity(k: int) -> "Multiplier":
        return Multiplier((1,) * k)

    def compose(self, other: "Multiplier") -> "Multiplier":
        if self.k != other.k:
            raise DimensionMismatch(f"Multiplier ranks differ: {self.k} vs {other.k}")
        return Multiplier(a * b for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        return "Multiplier(%s)" % (", ".join(str(a) for a in self.entries))


def is_monotone_multiplier(r: Multiplier) -> tuple[bool, LexVec | None]:
    """Decide whether multiplying by r preserves the lex order.

    The monotone multipliers are exactly the positive-prefix vectors: some
    leading block of strictly positive entries followed by zeros (the all-zero
    vector included).  When r fails, a witness s >= 0 with r*s < 0 is
    returned: a unit vector at the first negative entry, or e_i - e_j when a
    zero entry at i precedes a nonzero entry at j.
    """
    entries = r.entries
    k = len(entries)
    prefix_end = k
    for i, e in enumerate(entries):
        if e < 0:
            s = [Fraction(0)] * k
            s[i] = Fraction(1)
            return False, LexVec(s)
        if e == 0:
            prefix_end = i
            break
    for j in range(prefix_end + 1, k):
        e = entries[j]
        if e != 0:
            if e < 0:
                s = [Fraction(0)] * k
                s[j] = Fraction(1)
                return False, LexVec(s)
            s = [Fraction(0)] * k
            s[prefix_end] = Fraction(1)
            s[j] = Fraction(-1)
            return False, LexVec(s)
    return True, None


def apply_multiplier(r: Multiplier, g: LexVec) -> LexVec:
    """Componentwise product r * g."""
    if r.k != g.k:
        raise DimensionMismatch(f"rank mismatch: multiplier {r.k}, vector {g.k}")
    return LexVec(a * b for a, b in zip(r.entries, g.entries))


@dataclass(frozen=True)
class TowerProfile:
    """The convex-subgroup tower data for Q^(k): full tower only (n = k, j_i = i)."""

    k: int
    n: int
    j: tuple[int, ...]

    def __init__(self, k: int, n: int | None = None, j: Sequence[int] | None = None):
        if k < 0:
            raise LexfanError("k must be nonnegative")
        if n is None:
            n = k
        if j is None:
            j = tuple(range(n + 1))
        else:
            j = tuple(j)
        if n != k or j != tuple(range(k + 1)):
            raise LexfanError(
                "only the full tower over Q^(k) is supported (n = k, j_i = i)"
            )
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "j", j)

    @staticmethod
    def full(k: int) -> "TowerProfile":
        return TowerProfile(k)


def epsilon(profile: TowerProfile, i: int) -> Multiplier:
    """The truncation multiplier with k - j_i leading ones and j_i trailing zeros."""
    if not 0 <= i <= profile.n:
        raise LexfanError(f"level {i} out of range 0..{profile.n}")
    lead = profile.k - profile.j[i]
    return Multiplier((1,) * lead + (0,) * (profile.k - lead))


def truncate(g: LexVec, level: int) -> LexVec:
    """Apply the level-i truncation to g (full tower: zero the last i entries)."""
    return apply_multiplier(epsilon(TowerProfile.full(g.k), level), g)


def arch_level(g: LexVec) -> int:
    """Number of leading zero coordinates of g (k for the zero vector)."""
    for i, e in enumerate(g.entries):
        if e != 0:
            return i
    return g.k
