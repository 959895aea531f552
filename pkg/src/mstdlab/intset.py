"""Exact finite-integer-set arithmetic on bit vectors.

A set lives in a window ([0, n-1] for :class:`IntSet`, [lo, hi] for
:class:`SignedIntSet`) and is stored as a Python integer whose bit i marks
membership of the i-th window element. Sumsets are computed by shift-or
accumulation: S + S is the union over s in S of (bits of S) << s. The
difference set is the same convolution of S against its reflection,
re-centered afterwards, which keeps signed indexing out of the inner loop.
Cardinalities always come from popcounts; element lists are never
materialized on the counting paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = ["IntSet", "SignedIntSet", "sumset", "diffset", "is_mstd"]


def _iter_bits(bits: int) -> Iterator[int]:
    """Yield the positions of set bits, lowest first."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _reverse_bits(bits: int, width: int) -> int:
    """Reverse a width-bit value (bit i moves to bit width-1-i)."""
    out = 0
    for s in _iter_bits(bits):
        out |= 1 << (width - 1 - s)
    return out


@dataclass(frozen=True, eq=False)
class IntSet:
    """A finite set of integers inside the window [0, window_size - 1].

    Equality is extensional: two instances with the same members compare
    equal even when their windows differ. The empty set is representable
    in any window.
    """

    window_size: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.window_size < 1:
            raise ValueError("window_size must be a positive integer")
        if self.bits < 0 or self.bits >> self.window_size:
            raise ValueError("members must lie in [0, window_size - 1]")

    @classmethod
    def from_members(cls, members: Iterable[int], window_size: int | None = None) -> "IntSet":
        elems = list(members)
        if window_size is None:
            window_size = max(elems) + 1 if elems else 1
        bits = 0
        for x in elems:
            if not 0 <= x < window_size:
                raise ValueError(f"member {x} outside window [0, {window_size - 1}]")
            bits |= 1 << x
        return cls(window_size, bits)

    def members(self) -> frozenset[int]:
        return frozenset(_iter_bits(self.bits))

    def __iter__(self) -> Iterator[int]:
        return _iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.window_size and (self.bits >> x) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSet):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"IntSet({{{', '.join(map(str, sorted(self.members())))}}}, window={self.window_size})"

    def shift(self, c: int) -> "IntSet":
        """Translate every member by c, staying inside the window."""
        if self.bits == 0:
            return self
        lo = (self.bits & -self.bits).bit_length() - 1
        hi = self.bits.bit_length() - 1
        if lo + c < 0 or hi + c >= self.window_size:
            raise ValueError("shift would leave the window")
        return IntSet(self.window_size, self.bits << c if c >= 0 else self.bits >> -c)

    def reflect(self) -> "IntSet":
        """Mirror the set with x -> (window_size - 1) - x."""
        return IntSet(self.window_size, _reverse_bits(self.bits, self.window_size))


@dataclass(frozen=True, eq=False)
class SignedIntSet:
    """A finite set of integers inside the window [lo, hi].

    Bit i of ``bits`` marks membership of lo + i. Difference sets land
    here; symmetry about 0 is a tested property, not an invariant.
    """

    lo: int
    hi: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("window requires lo <= hi")
        if self.bits < 0 or self.bits >> (self.hi - self.lo + 1):
            raise ValueError("members must lie in [lo, hi]")

    @classmethod
    def from_members(cls, members: Iterable[int], lo: int, hi: int) -> "SignedIntSet":
        bits = 0
        for x in members:
            if not lo <= x <= hi:
                raise ValueError(f"member {x} outside window [{lo}, {hi}]")
            bits |= 1 << (x - lo)
        return cls(lo, hi, bits)

    def members(self) -> frozenset[int]:
        return frozenset(self.lo + i for i in _iter_bits(self.bits))

    def __iter__(self) -> Iterator[int]:
        return (self.lo + i for i in _iter_bits(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi and (self.bits >> (x - self.lo)) & 1 == 1

    def _canonical(self) -> tuple[int, int]:
        if self.bits == 0:
            return (0, 0)
        tz = (self.bits & -self.bits).bit_length() - 1
        return (self.bits >> tz, self.lo + tz)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedIntSet):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __repr__(self) -> str:
        return f"SignedIntSet({{{', '.join(map(str, sorted(self.members())))}}}, window=[{self.lo}, {self.hi}])"


def sumset(s: IntSet) -> IntSet:
    """All ordered pairwise sums s1 + s2, in the window [0, 2(n-1)].

    An empty input yields an empty output.
    """
    n = s.window_size
    acc = 0
    for shift in _iter_bits(s.bits):
        acc |= s.bits << shift
    return IntSet(2 * (n - 1) + 1, acc)


def diffset(s: IntSet) -> SignedIntSet:
    """All ordered differences s1 - s2, in the window [-(n-1), n-1].

    Computed as the shift-or of S against its reflection: with
    r(x) = (n-1) - x, the value s1 - s2 equals s1 + r(s2) - (n-1), so the
    accumulation runs over nonnegative indices and the window is
    re-centered once at the end.
    """
    n = s.window_size
    rev = _reverse_bits(s.bits, n)
    acc = 0
    for shift in _iter_bits(s.bits):
        acc |= rev << shift
    return SignedIntSet(-(n - 1), n - 1, acc)


def is_mstd(s: IntSet) -> bool:
    """True iff S has more sums than differences: |S + S| > |S - S|.

    The empty set is not MSTD (0 > 0 fails).
    """
    return len(sumset(s)) > len(diffset(s))
