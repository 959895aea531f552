"""The explicit dense MSTD family: S = L (union) M (union) R.

The end blocks L and R are fixed 7- and 8-element sets whose sumsets
cover everything they can reach except the value 1, while a reflection
asymmetry between them knocks +-(n-7) out of the difference set. The
middle block M ranges over subsets of [11, n-12] in which every prefix
and every suffix of the base interval is more than half full; that
majority condition forces M + M to cover the whole middle range of sums,
so |S + S| = 2n - 2 beats |S - S| <= 2n - 3.

Qualifying middles correspond one-to-one with bidirectional ballot
sequences of length n - 22 (bit j set iff 11 + j is in M), which is what
makes the family size exactly computable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from mstdlab.bbs import enumerate_bbs
from mstdlab.intset import IntSet, sumset
from mstdlab.walks import BitSeq

__all__ = [
    "ConstructionError",
    "WindowTooSmallError",
    "MiddleOutOfRangeError",
    "MajorityConditionError",
    "ConstructionParams",
    "MiddleSet",
    "left_fixture",
    "right_fixture",
    "has_majority_prefixes_suffixes",
    "middle_sum_complete",
    "construct",
    "enumerate_family",
]

LEFT_BLOCK = (0, 2, 3, 7, 8, 9, 10)
RIGHT_OFFSETS = (-11, -10, -9, -8, -6, -3, -2, -1)
MIN_WINDOW = 24


class ConstructionError(ValueError):
    """Base class for construction precondition failures."""


class WindowTooSmallError(ConstructionError):
    """The window must satisfy n >= 24 so the middle interval is nonempty."""


class MiddleOutOfRangeError(ConstructionError):
    """The middle set must sit exactly on the base interval [11, n-12]."""


class MajorityConditionError(ConstructionError):
    """A prefix or suffix of the base interval is at most half full."""


@dataclass(frozen=True)
class ConstructionParams:
    """Window size and the fixed end-block lengths ell = r = 11."""

    n: int
    ell: int = 11
    r: int = 11

    def __post_init__(self) -> None:
        if self.ell != 11 or self.r != 11:
            raise ConstructionError("the fixtures require ell = r = 11")
        if self.n < MIN_WINDOW:
            raise WindowTooSmallError(f"window n={self.n} must be >= {MIN_WINDOW}")

    @property
    def middle_lo(self) -> int:
        return self.ell

    @property
    def middle_hi(self) -> int:
        return self.n - self.r - 1

    @property
    def middle_len(self) -> int:
        return self.n - self.ell - self.r


@dataclass(frozen=True)
class MiddleSet:
    """A subset of a base interval [lo, hi], the candidate middle block."""

    lo: int
    hi: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("base interval requires lo <= hi")
        object.__setattr__(self, "members", frozenset(self.members))
        if any(not self.lo <= x <= self.hi for x in self.members):
            raise ValueError("members must lie in the base interval")

    @classmethod
    def from_members(cls, lo: int, hi: int, members: Iterable[int]) -> "MiddleSet":
        return cls(lo, hi, frozenset(members))

    @classmethod
    def from_bitseq(cls, lo: int, seq: BitSeq) -> "MiddleSet":
        """Bit j of the sequence marks membership of lo + j."""
        hi = lo + len(seq) - 1
        return cls(lo, hi, frozenset(lo + j for j, bit in enumerate(seq) if bit))

    @property
    def size(self) -> int:
        """Length m of the base interval (not the member count)."""
        return self.hi - self.lo + 1

    def as_bitseq(self) -> BitSeq:
        return BitSeq(tuple(1 if self.lo + j in self.members else 0 for j in range(self.size)))


def left_fixture() -> IntSet:
    """The fixed left block {0, 2, 3, 7, 8, 9, 10}; its sumset is
    [0, 20] minus {1}."""
    return IntSet.from_members(LEFT_BLOCK, window_size=11)


def right_fixture(n: int) -> IntSet:
    """The fixed right block {n-11, n-10, n-9, n-8, n-6, n-3, n-2, n-1};
    its sumset is the full interval [2n-22, 2n-2]."""
    if n < MIN_WINDOW:
        raise WindowTooSmallError(f"window n={n} must be >= {MIN_WINDOW}")
    return IntSet.from_members((n + off for off in RIGHT_OFFSETS), window_size=n)


def has_majority_prefixes_suffixes(middle: MiddleSet) -> bool:
    """True iff for every 0 < k <= m, the first k and the last k cells of
    the base interval each contain strictly more than k/2 members.

    Checked by direct prefix and suffix counting; the equivalence with
    the bidirectional ballot property of ``as_bitseq`` is a tested
    invariant, not an implementation shortcut.
    """
    m = middle.size
    ones = 0
    for k in range(1, m + 1):
        ones += 1 if (middle.lo + k - 1) in middle.members else 0
        if 2 * ones <= k:
            return False
    ones = 0
    for k in range(1, m + 1):
        ones += 1 if (middle.hi - k + 1) in middle.members else 0
        if 2 * ones <= k:
            return False
    return True


def middle_sum_complete(middle: MiddleSet) -> bool:
    """True iff, re-indexed to [1, m], the sumset of the middle equals the
    full interval [2, 2m]."""
    m = middle.size
    shifted = IntSet.from_members((x - middle.lo + 1 for x in middle.members), window_size=m + 1)
    target = ((1 << (2 * m - 1)) - 1) << 2  # bits 2 .. 2m
    return sumset(shifted).bits == target


def _coerce_middle(params: ConstructionParams, middle: MiddleSet | Iterable[int]) -> MiddleSet:
    lo, hi = params.middle_lo, params.middle_hi
    if isinstance(middle, MiddleSet):
        if (middle.lo, middle.hi) != (lo, hi):
            raise MiddleOutOfRangeError(
                f"middle base interval [{middle.lo}, {middle.hi}] is not [{lo}, {hi}]"
            )
        return middle
    members = frozenset(middle)
    if any(not lo <= x <= hi for x in members):
        raise MiddleOutOfRangeError(f"middle members must lie in [{lo}, {hi}]")
    return MiddleSet(lo, hi, members)


def construct(n: int, middle: MiddleSet | Iterable[int]) -> IntSet:
    """Assemble the MSTD set L (union) M (union) R inside [0, n-1].

    Preconditions are validated rather than trusted: the theorem's
    guarantee is conditional, and silent misuse would poison any density
    statistics computed from the family. Violations raise distinct
    ConstructionError subclasses (bad window n; middle out of range;
    majority condition failed).
    """
    params = ConstructionParams(n)
    m = _coerce_middle(params, middle)
    if not has_majority_prefixes_suffixes(m):
        raise MajorityConditionError("a prefix or suffix of the middle is at most half full")
    bits = 0
    for x in LEFT_BLOCK:
        bits |= 1 << x
    for off in RIGHT_OFFSETS:
        bits |= 1 << (n + off)
    for x in m.members:
        bits |= 1 << x
    return IntSet(n, bits)


def enumerate_family(n: int) -> Iterator[IntSet]:
    """Yield every member of the family for window n, one per qualifying
    middle, in lexicographic order of the middle's bit sequence.

    The family size equals the number of bidirectional ballot sequences
    of length n - 22.
    """
    params = ConstructionParams(n)
    for seq in enumerate_bbs(params.middle_len):
        yield construct(n, MiddleSet.from_bitseq(params.middle_lo, seq))
