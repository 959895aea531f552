# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels.

Same contract as mstdlab._kernels.pure, word-sliced for speed: the census
fast path packs a whole subset, its sumset and its re-centered difference
set into single 64-bit words (valid for windows up to 32), and the Monte
Carlo path works on arrays of 64-bit words (windows up to 4096). All hot
loops release the GIL so callers can thread over mask ranges or sample
blocks.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport int64_t, uint64_t
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MC_BLOCK = 1 << 16

DEF MAX_WORDS = 64        # windows up to 4096 elements
DEF ACC_WORDS = 128       # sum/diff accumulators span up to 2n-1 bits

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15UL


cdef inline uint64_t _mix64(uint64_t z) noexcept nogil:
    z ^= z >> 30
    z = z * 0xBF58476D1CE4E5B9UL
    z ^= z >> 27
    z = z * 0x94D049BB133111EBUL
    z ^= z >> 31
    return z


cdef inline uint64_t _next64(uint64_t* state) noexcept nogil:
    state[0] = state[0] + GOLDEN
    return _mix64(state[0])


# ---------------------------------------------------------------------------
# single-word MSTD predicate (windows up to 32)

cdef inline bint _mstd_word(uint64_t mask, int n) noexcept nogil:
    cdef uint64_t rev = 0, acc_s = 0, acc_d = 0, m
    cdef int s
    m = mask
    while m:
        s = __builtin_ctzll(m)
        rev |= (<uint64_t>1) << (n - 1 - s)
        m &= m - 1
    m = mask
    while m:
        s = __builtin_ctzll(m)
        acc_s |= mask << s
        acc_d |= rev << s
        m &= m - 1
    return __builtin_popcountll(acc_s) > __builtin_popcountll(acc_d)


# ---------------------------------------------------------------------------
# multi-word MSTD predicate (windows up to 4096)

cdef inline void _acc_or_shift(uint64_t* src, int nw, int shift, uint64_t* acc) noexcept nogil:
    cdef int off = shift >> 6
    cdef int sh = shift & 63
    cdef int k
    if sh == 0:
        for k in range(nw):
            acc[off + k] |= src[k]
    else:
        for k in range(nw):
            acc[off + k] |= src[k] << sh
            acc[off + k + 1] |= src[k] >> (64 - sh)


cdef bint _mstd_words(uint64_t* sw, int n, int nw) noexcept nogil:
    cdef uint64_t rw[MAX_WORDS]
    cdef uint64_t acc_s[ACC_WORDS]
    cdef uint64_t acc_d[ACC_WORDS]
    cdef uint64_t w
    cdef int wi, j, s, ri, k, aw
    cdef int pop_s = 0, pop_d = 0

    aw = (2 * n - 1 + 63) >> 6
    memset(rw, 0, nw * sizeof(uint64_t))
    memset(acc_s, 0, aw * sizeof(uint64_t))
    memset(acc_d, 0, aw * sizeof(uint64_t))

    for wi in range(nw):
        w = sw[wi]
        while w:
            j = __builtin_ctzll(w)
            ri = n - 1 - (wi * 64 + j)
            rw[ri >> 6] |= (<uint64_t>1) << (ri & 63)
            w &= w - 1
    for wi in range(nw):
        w = sw[wi]
        while w:
            j = __builtin_ctzll(w)
            s = wi * 64 + j
            _acc_or_shift(sw, nw, s, acc_s)
            _acc_or_shift(rw, nw, s, acc_d)
            w &= w - 1
    for k in range(aw):
        pop_s += __builtin_popcountll(acc_s[k])
        pop_d += __builtin_popcountll(acc_d[k])
    return pop_s > pop_d


cdef int _fill_words(object mask, uint64_t* out, int nw) except -1:
    cdef int k
    for k in range(nw):
        out[k] = <uint64_t>((mask >> (64 * k)) & 0xFFFFFFFFFFFFFFFF)
    return 0


def sumdiff_sizes(mask, int n):
    """(|S + S|, |S - S|) for the subset of [0, n-1] encoded by mask."""
    if n < 1 or n > 4096:
        raise ValueError("window must satisfy 1 <= n <= 4096")
    if mask < 0 or mask >> n:
        raise ValueError("mask does not fit the window")
    if mask == 0:
        return 0, 0

    cdef uint64_t sw[MAX_WORDS]
    cdef uint64_t rw[MAX_WORDS]
    cdef uint64_t acc_s[ACC_WORDS]
    cdef uint64_t acc_d[ACC_WORDS]
    cdef uint64_t w
    cdef int nw = (n + 63) >> 6
    cdef int aw = (2 * n - 1 + 63) >> 6
    cdef int wi, j, s, ri, k
    cdef int pop_s = 0, pop_d = 0

    _fill_words(mask, sw, nw)
    memset(rw, 0, nw * sizeof(uint64_t))
    memset(acc_s, 0, aw * sizeof(uint64_t))
    memset(acc_d, 0, aw * sizeof(uint64_t))
    for wi in range(nw):
        w = sw[wi]
        while w:
            j = __builtin_ctzll(w)
            ri = n - 1 - (wi * 64 + j)
            rw[ri >> 6] |= (<uint64_t>1) << (ri & 63)
            w &= w - 1
    for wi in range(nw):
        w = sw[wi]
        while w:
            j = __builtin_ctzll(w)
            s = wi * 64 + j
            _acc_or_shift(sw, nw, s, acc_s)
            _acc_or_shift(rw, nw, s, acc_d)
            w &= w - 1
    for k in range(aw):
        pop_s += __builtin_popcountll(acc_s[k])
        pop_d += __builtin_popcountll(acc_d[k])
    return pop_s, pop_d


def census_mstd_count(int n, unsigned long long lo, unsigned long long hi):
    """Number of MSTD subsets of [0, n-1] among masks in [lo, hi)."""
    if n < 1 or n > 32:
        raise ValueError("census fast path requires 1 <= n <= 32")
    cdef uint64_t mask
    cdef int64_t hits = 0
    with nogil:
        for mask in range(lo, hi):
            if mask == 0:
                continue
            if _mstd_word(mask, n):
                hits += 1
    return hits


def mc_block_hits(int n, unsigned long long seed, unsigned long long block_index,
                  int nsamples):
    """MSTD hits among nsamples uniform subsets of [0, n-1]; see pure.py
    for the block-stream derivation this must match."""
    if n < 1 or n > 4096:
        raise ValueError("window must satisfy 1 <= n <= 4096")
    if nsamples < 0:
        raise ValueError("nsamples must be >= 0")

    cdef uint64_t state = _mix64(seed + (block_index + 1) * GOLDEN)
    cdef uint64_t sw[MAX_WORDS]
    cdef uint64_t topmask
    cdef int nw = (n + 63) >> 6
    cdef int rem = n & 63
    cdef int i, k, nonzero
    cdef int64_t hits = 0

    topmask = <uint64_t>0xFFFFFFFFFFFFFFFF if rem == 0 else ((<uint64_t>1 << rem) - 1)
    with nogil:
        for i in range(nsamples):
            nonzero = 0
            for k in range(nw):
                sw[k] = _next64(&state)
            sw[nw - 1] &= topmask
            for k in range(nw):
                if sw[k]:
                    nonzero = 1
                    break
            if not nonzero:
                continue
            if n <= 32:
                if _mstd_word(sw[0], n):
                    hits += 1
            elif _mstd_words(sw, n, nw):
                hits += 1
    return hits


# ---------------------------------------------------------------------------
# 0-1 sequence filters (bit j of a mask = sequence position j)

cdef inline bint _mask_is_ballot(uint64_t mask, int n) noexcept nogil:
    cdef int h = 0, j
    for j in range(n):
        if (mask >> j) & 1:
            h += 1
        else:
            h -= 1
        if h <= 0:
            return False
    return True


cdef inline bint _mask_is_bbs(uint64_t mask, int n) noexcept nogil:
    cdef int h = 0, j
    if not _mask_is_ballot(mask, n):
        return False
    for j in range(n - 1, -1, -1):
        if (mask >> j) & 1:
            h += 1
        else:
            h -= 1
        if h <= 0:
            return False
    return True


def count_bbs_exhaustive(int n):
    """Count bidirectional ballot sequences of length n over all 2**n masks."""
    if n < 1 or n > 30:
        raise ValueError("exhaustive filter requires 1 <= n <= 30")
    cdef uint64_t mask, lim = (<uint64_t>1) << n
    cdef int64_t count = 0
    with nogil:
        for mask in range(lim):
            if _mask_is_bbs(mask, n):
                count += 1
    return count


cdef inline bint _mask_is_b_bounded(uint64_t mask, int n, int b) noexcept nogil:
    cdef int h = 0, hmax = 0, j
    for j in range(n):
        if (mask >> j) & 1:
            h += 1
        else:
            h -= 1
        if h <= 0:
            return False
        if h > hmax:
            hmax = h
    return hmax <= 2 * b and h > b


def count_b_bounded(int n, int b):
    """Count b-bounded sequences of length n over all 2**n masks."""
    if n < 1 or n > 30 or b < 1:
        raise ValueError("requires 1 <= n <= 30 and b >= 1")
    cdef uint64_t mask, lim = (<uint64_t>1) << n
    cdef int64_t count = 0
    with nogil:
        for mask in range(lim):
            if _mask_is_b_bounded(mask, n, b):
                count += 1
    return count


def b_bounded_masks(int n, int b):
    """All masks of b-bounded sequences of length n, ascending."""
    if n < 1 or n > 30 or b < 1:
        raise ValueError("requires 1 <= n <= 30 and b >= 1")
    cdef uint64_t mask, lim = (<uint64_t>1) << n
    out = []
    for mask in range(lim):
        if _mask_is_b_bounded(mask, n, b):
            out.append(mask)
    return out


cdef inline uint64_t _reverse_mask(uint64_t mask, int n) noexcept nogil:
    cdef uint64_t out = 0
    cdef int j
    while mask:
        j = __builtin_ctzll(mask)
        out |= (<uint64_t>1) << (n - 1 - j)
        mask &= mask - 1
    return out


def concat_pairs_not_bbs(masks1, int n1, masks2, int n2):
    """Count pairs whose concatenation m1 + reverse(m2) fails the
    bidirectional ballot test."""
    if n1 < 0 or n2 < 0 or n1 + n2 > 62 or n1 + n2 < 1:
        raise ValueError("requires 1 <= n1 + n2 <= 62")
    cdef Py_ssize_t len1 = len(masks1), len2 = len(masks2)
    cdef uint64_t* a1 = <uint64_t*>PyMem_Malloc(max(len1, 1) * sizeof(uint64_t))
    cdef uint64_t* a2 = <uint64_t*>PyMem_Malloc(max(len2, 1) * sizeof(uint64_t))
    if a1 == NULL or a2 == NULL:
        PyMem_Free(a1)
        PyMem_Free(a2)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int n = n1 + n2
    cdef int64_t fails = 0
    cdef uint64_t m1
    try:
        for i in range(len1):
            a1[i] = <uint64_t>masks1[i]
        for j in range(len2):
            # pre-shift the reversed second halves into their final position
            a2[j] = _reverse_mask(<uint64_t>masks2[j], n2) << n1
        with nogil:
            for i in range(len1):
                m1 = a1[i]
                for j in range(len2):
                    if not _mask_is_bbs(m1 | a2[j], n):
                        fails += 1
    finally:
        PyMem_Free(a1)
        PyMem_Free(a2)
    return fails
