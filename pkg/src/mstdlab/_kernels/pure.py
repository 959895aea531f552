"""Pure-Python scan kernels.

These are the reference implementations of the hot inner loops: the MSTD
bit-vector predicate, the exhaustive subset census, the seeded Monte Carlo
sampler, and the full 2**n filters over 0-1 sequences. The compiled
backend (``mstdlab._kernels._fastcore``) must match them bit for bit; the
test suite cross-checks the two.

Random numbers come from SplitMix64, chosen because it is tiny, well
known, and trivially reproducible across languages. Monte Carlo sampling
is split into fixed-size blocks of ``MC_BLOCK`` samples; block b draws
from a SplitMix64 stream whose initial state is
``mix64(seed + (b + 1) * 0x9E3779B97F4A7C15)``, so results depend only on
(n, samples, seed), never on thread scheduling.
"""

from __future__ import annotations

MC_BLOCK = 1 << 16

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer (Stafford mix 13)."""
    z &= _M64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _M64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _M64
    z ^= z >> 31
    return z


class SplitMix64:
    """The SplitMix64 generator: state += golden gamma, output mix64(state)."""

    __slots__ = ("_state",)

    def __init__(self, state: int) -> None:
        self._state = state & _M64

    def next64(self) -> int:
        self._state = (self._state + _GOLDEN) & _M64
        return mix64(self._state)


def block_rng(seed: int, block_index: int) -> SplitMix64:
    """The per-block sample stream; see the module docstring."""
    return SplitMix64(mix64(seed + (block_index + 1) * _GOLDEN))


def _reverse_bits(bits: int, width: int) -> int:
    out = 0
    m = bits
    while m:
        low = m & -m
        out |= 1 << (width - 1 - (low.bit_length() - 1))
        m ^= low
    return out


def sumdiff_sizes(mask: int, n: int) -> tuple[int, int]:
    """(|S + S|, |S - S|) for the subset of [0, n-1] encoded by mask."""
    if n < 1 or n > 4096:
        raise ValueError("window must satisfy 1 <= n <= 4096")
    if mask < 0 or mask >> n:
        raise ValueError("mask does not fit the window")
    if mask == 0:
        return 0, 0
    rev = _reverse_bits(mask, n)
    acc_s = 0
    acc_d = 0
    m = mask
    while m:
        low = m & -m
        s = low.bit_length() - 1
        acc_s |= mask << s
        acc_d |= rev << s
        m ^= low
    return acc_s.bit_count(), acc_d.bit_count()


def census_mstd_count(n: int, lo: int, hi: int) -> int:
    """Number of MSTD subsets of [0, n-1] among masks in [lo, hi)."""
    if n < 1 or n > 32:
        raise ValueError("census fast path requires 1 <= n <= 32")
    hits = 0
    for mask in range(lo, hi):
        if mask == 0:
            continue
        rev = _reverse_bits(mask, n)
        acc_s = 0
        acc_d = 0
        m = mask
        while m:
            low = m & -m
            s = low.bit_length() - 1
            acc_s |= mask << s
            acc_d |= rev << s
            m ^= low
        if acc_s.bit_count() > acc_d.bit_count():
            hits += 1
    return hits


def mc_block_hits(n: int, seed: int, block_index: int, nsamples: int) -> int:
    """MSTD hits among nsamples uniform random subsets of [0, n-1].

    Each sample draws ceil(n / 64) words from the block stream (low word
    first) and truncates to n bits, so every element is included
    independently with probability 1/2.
    """
    if n < 1 or n > 4096:
        raise ValueError("window must satisfy 1 <= n <= 4096")
    if nsamples < 0:
        raise ValueError("nsamples must be >= 0")
    rng = block_rng(seed, block_index)
    nwords = (n + 63) // 64
    full = (1 << n) - 1
    hits = 0
    for _ in range(nsamples):
        mask = 0
        for w in range(nwords):
            mask |= rng.next64() << (64 * w)
        mask &= full
        if mask == 0:
            continue
        rev = _reverse_bits(mask, n)
        acc_s = 0
        acc_d = 0
        m = mask
        while m:
            low = m & -m
            s = low.bit_length() - 1
            acc_s |= mask << s
            acc_d |= rev << s
            m ^= low
        if acc_s.bit_count() > acc_d.bit_count():
            hits += 1
    return hits


def _mask_is_ballot(mask: int, n: int) -> bool:
    h = 0
    for j in range(n):
        h += 1 if (mask >> j) & 1 else -1
        if h <= 0:
            return False
    return True


def _mask_is_bbs(mask: int, n: int) -> bool:
    if not _mask_is_ballot(mask, n):
        return False
    h = 0
    for j in range(n - 1, -1, -1):
        h += 1 if (mask >> j) & 1 else -1
        if h <= 0:
            return False
    return True


def count_bbs_exhaustive(n: int) -> int:
    """Count bidirectional ballot sequences of length n by filtering all
    2**n sequences (bit j of the mask is sequence position j)."""
    if n < 1 or n > 30:
        raise ValueError("exhaustive filter requires 1 <= n <= 30")
    return sum(1 for mask in range(1 << n) if _mask_is_bbs(mask, n))


def _mask_is_b_bounded(mask: int, n: int, b: int) -> bool:
    h = 0
    hmax = 0
    for j in range(n):
        h += 1 if (mask >> j) & 1 else -1
        if h <= 0:
            return False
        if h > hmax:
            hmax = h
    return hmax <= 2 * b and h > b


def count_b_bounded(n: int, b: int) -> int:
    """Count b-bounded sequences of length n by exhaustive filtering."""
    if n < 1 or n > 30 or b < 1:
        raise ValueError("requires 1 <= n <= 30 and b >= 1")
    return sum(1 for mask in range(1 << n) if _mask_is_b_bounded(mask, n, b))


def b_bounded_masks(n: int, b: int) -> list[int]:
    """All masks of b-bounded sequences of length n, ascending."""
    if n < 1 or n > 30 or b < 1:
        raise ValueError("requires 1 <= n <= 30 and b >= 1")
    return [mask for mask in range(1 << n) if _mask_is_b_bounded(mask, n, b)]


def concat_pairs_not_bbs(masks1: list[int], n1: int, masks2: list[int], n2: int) -> int:
    """Number of pairs (m1, m2) whose concatenation m1 + reverse(m2) is
    NOT a bidirectional ballot sequence. Zero means the gluing property
    holds for every pair."""
    if n1 < 0 or n2 < 0 or n1 + n2 > 62 or n1 + n2 < 1:
        raise ValueError("requires 1 <= n1 + n2 <= 62")
    n = n1 + n2
    rev2 = [_reverse_bits(m, n2) << n1 for m in masks2]
    fails = 0
    for m1 in masks1:
        for r2 in rev2:
            if not _mask_is_bbs(m1 | r2, n):
                fails += 1
    return fails
