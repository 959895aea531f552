"""0-1 sequences, their lattice-walk view, and exact ballot counting.

A sequence maps to a walk by reading each 1 as a +1 step and each 0 as a
-1 step; the walk heights are the prefix sums. A ballot sequence keeps
every nonempty prefix strictly positive, i.e. the walk's starting point is
its unique minimum. All counts are exact Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

__all__ = [
    "BitSeq",
    "Walk",
    "is_ballot",
    "ballot_count",
    "ballot_count_height_range",
    "is_b_bounded",
    "bounded_lower_bound",
    "reflect_after_last_exceed",
    "concat_with_reversed",
]

Real = int | float | Fraction


@dataclass(frozen=True, eq=True)
class BitSeq:
    """An immutable 0-1 sequence."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @classmethod
    def from_iterable(cls, bits: Iterable[int]) -> "BitSeq":
        return cls(tuple(bits))

    @classmethod
    def from_string(cls, s: str) -> "BitSeq":
        return cls(tuple(int(c) for c in s))

    @classmethod
    def from_mask(cls, mask: int, length: int) -> "BitSeq":
        """Build from an integer mask; bit j of the mask is position j."""
        if mask < 0 or mask >> length:
            raise ValueError("mask does not fit in the given length")
        return cls(tuple((mask >> j) & 1 for j in range(length)))

    def to_mask(self) -> int:
        mask = 0
        for j, b in enumerate(self.bits):
            mask |= b << j
        return mask

    @property
    def ones(self) -> int:
        return sum(self.bits)

    @property
    def zeros(self) -> int:
        return len(self.bits) - self.ones

    def reverse(self) -> "BitSeq":
        return BitSeq(self.bits[::-1])

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __repr__(self) -> str:
        return f"BitSeq({self})" if self.bits else "BitSeq()"


@dataclass(frozen=True, eq=True)
class Walk:
    """The prefix-sum view of a BitSeq: heights S_0 = 0, S_i = S_{i-1} +- 1."""

    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        hs = self.heights
        if not hs or hs[0] != 0:
            raise ValueError("a walk starts at height 0")
        if any(abs(hs[i] - hs[i - 1]) != 1 for i in range(1, len(hs))):
            raise ValueError("walk steps must be +1 or -1")

    @classmethod
    def from_bitseq(cls, s: BitSeq) -> "Walk":
        hs = [0]
        for b in s.bits:
            hs.append(hs[-1] + (1 if b else -1))
        return cls(tuple(hs))

    def to_bitseq(self) -> BitSeq:
        hs = self.heights
        return BitSeq(tuple(1 if hs[i] > hs[i - 1] else 0 for i in range(1, len(hs))))

    @property
    def n_steps(self) -> int:
        return len(self.heights) - 1

    @property
    def final_height(self) -> int:
        return self.heights[-1]

    @property
    def max_height(self) -> int:
        return max(self.heights)

    @property
    def min_height(self) -> int:
        return min(self.heights)

    def is_ballot_walk(self) -> bool:
        """True iff the start is the unique minimum (all later heights > 0)."""
        return all(h > 0 for h in self.heights[1:])


def is_ballot(s: BitSeq) -> bool:
    """True iff every nonempty prefix has strictly more 1's than 0's.

    The empty sequence passes vacuously.
    """
    h = 0
    for b in s.bits:
        h += 1 if b else -1
        if h <= 0:
            return False
    return True


def _binom(n: int, k: int) -> int:
    """C(n, k), defined as 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def ballot_count(p: int, q: int) -> int:
    """Exact number of ballot sequences with p 1's and q 0's, for p > q >= 0.

    Evaluates (p - q) / (p + q) * C(p + q, p) in integer arithmetic; the
    division is exact.
    """
    if q < 0 or p <= q:
        raise ValueError("ballot_count requires p > q >= 0")
    num = (p - q) * math.comb(p + q, p)
    count, rem = divmod(num, p + q)
    assert rem == 0
    return count


def _ceil_half(x: Real) -> int:
    """ceil(x / 2), exact for ints and Fractions."""
    if isinstance(x, int):
        return (x + 1) // 2
    return math.ceil(Fraction(x) / 2) if isinstance(x, Fraction) else math.ceil(x / 2)


def _floor_half(x: Real) -> int:
    """floor(x / 2), exact for ints and Fractions."""
    if isinstance(x, int):
        return x // 2
    return math.floor(Fraction(x) / 2) if isinstance(x, Fraction) else math.floor(x / 2)


def ballot_count_height_range(n: int, a: Real, b: Real) -> int:
    """Exact number of n-step ballot walks with final height in [a, b].

    a and b may be real (half-integer endpoints are convenient for parity
    reasons); the closed form is
    C(n-1, ceil((a+n)/2) - 1) - C(n-1, floor((b+n)/2)), with binomials
    taken as 0 outside their range.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if a < 0 or not a < b:
        raise ValueError("requires 0 <= a < b")
    k_lo = _ceil_half(a + n) - 1
    k_hi = _floor_half(b + n)
    count = _binom(n - 1, k_lo) - _binom(n - 1, k_hi)
    assert count >= 0
    return count


def is_b_bounded(s: BitSeq, b: int) -> bool:
    """True iff s is a ballot sequence whose walk never exceeds height 2b
    and ends strictly above height b."""
    if b < 1:
        raise ValueError("b must be a positive integer")
    h = 0
    hmax = 0
    for bit in s.bits:
        h += 1 if bit else -1
        if h <= 0:
            return False
        if h > hmax:
            hmax = h
    return hmax <= 2 * b and h > b


def bounded_lower_bound(n: int, b: int) -> int:
    """Three-binomial lower bound on the number of b-bounded walks of n steps.

    C(n-1, ceil((n+b-1)/2)) - C(n-1, floor(n/2)+b) - C(n-1, ceil(n/2)+b),
    clamped at 0 (for small n the expression can go negative, where the
    bound is vacuous).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if b < 1:
        raise ValueError("b must be a positive integer")
    m = n - 1
    value = (
        _binom(m, (n + b - 1 + 1) // 2)  # ceil((n+b-1)/2)
        - _binom(m, n // 2 + b)
        - _binom(m, (n + 1) // 2 + b)
    )
    return max(0, value)


def reflect_after_last_exceed(w: Walk, b: int) -> Walk:
    """Reflect the tail of a ballot walk about the line y = 2b + 1.

    The walk must enter the region y > 2b at some point and end in
    b < y <= 2b. The segment after the last visit to height 2b + 1 is
    reflected, producing a ballot walk that ends at height >= 2b + 2.
    This map is injective on its domain.
    """
    if b < 1:
        raise ValueError("b must be a positive integer")
    if not w.is_ballot_walk():
        raise ValueError("walk is not a ballot walk")
    top = 2 * b + 1
    if w.max_height <= 2 * b:
        raise ValueError("walk never enters the region y > 2b")
    e = w.final_height
    if not b < e <= 2 * b:
        raise ValueError("walk must end in b < y <= 2b")
    hs = w.heights
    t = max(i for i, h in enumerate(hs) if h > 2 * b)
    # Coming down from the excursion, the last point above 2b sits at 2b+1.
    assert hs[t] == top
    reflected = hs[: t + 1] + tuple(2 * top - h for h in hs[t + 1 :])
    return Walk(reflected)


def concat_with_reversed(w1: BitSeq, w2: BitSeq) -> BitSeq:
    """Concatenate w1 with the order-reversal of w2 (no bit complement).

    Reversing a sequence turns its walk's unique-minimum start into a
    unique-maximum end, which is what makes two b-bounded halves glue into
    a bidirectional ballot sequence.
    """
    return BitSeq(w1.bits + w2.bits[::-1])
