"""Bidirectional ballot sequences and exact counts of them.

A bidirectional ballot sequence (BBS) is a 0-1 sequence in which every
prefix and every suffix contains strictly more 1's than 0's; as a walk,
the start is the unique minimum and the end is the unique maximum. The
count of BBS of length n is computed here by two independent exact
engines:

* a strip dynamic program: split by final height h and count n-step walks
  from 0 to h whose interior stays strictly between 0 and h;
* a reflection engine: the same strip counts written as finite
  method-of-images sums of binomial coefficients over the group generated
  by reflections in the two barrier lines.

No recurrence or generating function is known for these counts, so engine
agreement (plus the exhaustive filter for small n) is the correctness
evidence. The strip DP costs O(n^3) total and is comfortable to a few
hundred; the reflection engine needs O(n log n) binomials from one Pascal
row and carries n in the thousands.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from mstdlab import _kernels
from mstdlab.walks import BitSeq, is_ballot

__all__ = [
    "is_bbs",
    "enumerate_bbs",
    "strip_paths",
    "count_bbs_dp",
    "count_bbs_dp_through",
    "count_bbs_reflection",
    "count_bbs_exhaustive",
]


def is_bbs(s: BitSeq) -> bool:
    """True iff s and its reversal are both ballot sequences."""
    return is_ballot(s) and is_ballot(s.reverse())


def enumerate_bbs(n: int) -> Iterator[BitSeq]:
    """Yield every bidirectional ballot sequence of length n, each once,
    in lexicographic order (0 sorts before 1).

    Uses a pruned depth-first search: a partial walk dies as soon as its
    height drops below 1 or the remaining steps cannot climb strictly
    above the running maximum.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield BitSeq(())
        return
    buf = [0] * n

    def rec(i: int, h: int, hmax: int) -> Iterator[BitSeq]:
        if i == n:
            yield BitSeq(tuple(buf))
            return
        last = i == n - 1
        for v in (0, 1):
            nh = h + 1 if v else h - 1
            if last:
                if nh <= hmax:
                    continue
            else:
                nhmax = nh if nh > hmax else hmax
                if nh < 1 or nh + (n - i - 1) <= nhmax:
                    continue
            buf[i] = v
            yield from rec(i + 1, nh, nh if nh > hmax else hmax)

    yield from rec(0, 0, 0)


def strip_paths(n: int, h: int) -> int:
    """Exact number of n-step walks from 0 to h with 0 < height < h at
    every interior point; zero when n and h have different parity.

    These are the strips a bidirectional ballot walk decomposes into by
    final height.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= h <= n:
        raise ValueError("requires 1 <= h <= n")
    if (n - h) % 2:
        return 0
    if h == n:
        return 1
    if h == 1:
        return 0  # n > 1 leaves no room strictly between the lines
    # v[y] = number of t-step walks from 0 ending at interior height y
    v = [0] * h
    v[1] = 1
    for _ in range(2, n):
        v = [0] + [v[y - 1] + (v[y + 1] if y + 1 < h else 0) for y in range(1, h)]
    return v[h - 1]


def count_bbs_dp(n: int) -> int:
    """Count bidirectional ballot sequences of length n by summing strip
    path counts over all final heights (the strip DP engine)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    start = 1 if n % 2 else 2
    return sum(strip_paths(n, h) for h in range(start, n + 1, 2))


@lru_cache(maxsize=8)
def count_bbs_dp_through(nmax: int) -> tuple[int, ...]:
    """Strip-DP counts for every length 1..nmax in one pass per strip
    height; entry [k] is the count for length k.

    Entry [0] is 1 (the empty sequence satisfies the definition
    vacuously) and is never reported by the CLI.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    counts = [0] * (nmax + 1)
    counts[0] = 1
    counts[1] = 1  # the strip of height 1 admits only the single-step walk
    for h in range(2, nmax + 1):
        # interior vector after t steps; reading v[h-1] at step t gives the
        # strip paths of length t+1 (one final up-step onto the top line)
        v = [0] * h
        v[1] = 1
        if h == 2:
            counts[2] += v[1]
        for t in range(2, nmax):
            v = [0] + [v[y - 1] + (v[y + 1] if y + 1 < h else 0) for y in range(1, h)]
            if t + 1 >= h:
                counts[t + 1] += v[h - 1]
    return tuple(counts)


def _pascal_row(m: int) -> list[int]:
    """The full row C(m, 0..m), by the multiplicative recurrence."""
    row = [1] * (m + 1)
    c = 1
    for k in range(1, m + 1):
        c = c * (m - k + 1) // k
        row[k] = c
    return row


def _strip_by_reflection(m: int, h: int, row: list[int]) -> int:
    """Walks of m steps from height 1 to height h-1 staying inside the
    open strip (0, h), via the two-barrier method of images.

    The images of the endpoint under the reflection group are y + 2kh
    (positive sign) and -y + 2kh (negative sign); out-of-range binomials
    vanish, so the sum has O(m / h) live terms.
    """
    x, y = 1, h - 1
    period = 2 * h

    def u(d: int) -> int:
        if d < -m or d > m or (m + d) % 2:
            return 0
        return row[(m + d) // 2]

    kmax = (m + x + y) // period + 1
    total = 0
    for k in range(-kmax, kmax + 1):
        total += u(y - x + period * k) - u(-y - x + period * k)
    return total


def count_bbs_reflection(n: int) -> int:
    """Count bidirectional ballot sequences of length n by per-strip
    reflection sums (the second, independent exact engine)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    m = n - 2  # first and last steps are forced upward
    row = _pascal_row(m)
    start = 1 if n % 2 else 2
    return sum(_strip_by_reflection(m, h, row) for h in range(start, n + 1, 2))


def count_bbs_exhaustive(n: int) -> int:
    """Count bidirectional ballot sequences of length n by filtering all
    2**n sequences (the oracle scan; kernel-backed)."""
    return _kernels.count_bbs_exhaustive(n)
