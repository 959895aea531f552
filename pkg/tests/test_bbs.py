import math

import pytest

from mstdlab import _kernels
from mstdlab.bbs import (
    count_bbs_dp,
    count_bbs_dp_through,
    count_bbs_exhaustive,
    count_bbs_reflection,
    enumerate_bbs,
    is_bbs,
    strip_paths,
)
from mstdlab.golden import BBS_COUNTS
from mstdlab.walks import BitSeq
from oracles import all_bitseqs, count_bbs_scan, is_bbs_naive, strip_path_count_scan


# --- is_bbs -----------------------------------------------------------------


def test_is_bbs_examples():
    assert is_bbs(BitSeq.from_string("11011"))
    assert not is_bbs(BitSeq.from_string("11101"))
    assert is_bbs(BitSeq.from_string("1" * 9))
    assert is_bbs(BitSeq.from_string("11011011010011111011"))


def test_is_bbs_matches_naive():
    for n in range(0, 13):
        for bits in all_bitseqs(n):
            assert is_bbs(BitSeq(bits)) == is_bbs_naive(bits)


# --- enumerate_bbs ----------------------------------------------------------


def test_enumerate_small():
    assert [str(s) for s in enumerate_bbs(5)] == ["11011", "11111"]
    assert [str(s) for s in enumerate_bbs(1)] == ["1"]
    assert sum(1 for _ in enumerate_bbs(12)) == 91


def test_enumerate_matches_filter():
    for n in range(0, 15):
        got = [s.bits for s in enumerate_bbs(n)]
        want = [bits for bits in all_bitseqs(n) if is_bbs_naive(bits)]
        assert got == want  # same sequences, lexicographic, no duplicates


def test_enumerate_closed_under_reversal():
    for n in (7, 10, 13):
        seqs = {s.bits for s in enumerate_bbs(n)}
        assert seqs == {bits[::-1] for bits in seqs}


# --- strip_paths ------------------------------------------------------------


def test_strip_paths_examples():
    assert strip_paths(5, 5) == 1
    assert strip_paths(5, 3) == 1
    assert strip_paths(5, 1) == 0
    assert strip_paths(6, 3) == 0  # parity
    with pytest.raises(ValueError):
        strip_paths(5, 0)
    with pytest.raises(ValueError):
        strip_paths(5, 6)


def test_strip_paths_vs_scan():
    for n in range(1, 12):
        for h in range(1, n + 1):
            assert strip_paths(n, h) == strip_path_count_scan(n, h)


def test_strips_partition_bbs():
    for n in range(1, 21):
        total = sum(strip_paths(n, h) for h in range(1, n + 1))
        assert total == BBS_COUNTS.get(n, count_bbs_dp(n))


# --- counting engines -------------------------------------------------------


def test_dp_matches_golden_table():
    through = count_bbs_dp_through(24)
    for n, want in BBS_COUNTS.items():
        assert through[n] == want
        assert count_bbs_dp(n) == want


def test_reflection_matches_golden_table():
    for n, want in BBS_COUNTS.items():
        assert count_bbs_reflection(n) == want


def test_engines_agree_to_200():
    through = count_bbs_dp_through(200)
    for n in range(1, 201):
        assert through[n] == count_bbs_reflection(n), n


def test_exhaustive_matches_engines():
    for n in range(1, 21):
        assert count_bbs_exhaustive(n) == count_bbs_dp(n)


def test_exhaustive_matches_naive_scan():
    for n in range(1, 15):
        assert count_bbs_exhaustive(n) == count_bbs_scan(n)


def test_count_rejects_nonpositive():
    for fn in (count_bbs_dp, count_bbs_reflection, count_bbs_exhaustive):
        with pytest.raises(ValueError):
            fn(0)


def test_monotone_growth_regression():
    # observed on computed values; not a claimed theorem
    through = count_bbs_dp_through(120)
    for n in range(1, 120):
        assert through[n + 1] >= through[n]


# --- the two-sided squeeze --------------------------------------------------


def _ballot_total(n):
    return math.comb(n - 1, (n + 1) // 2 - 1)


def test_sandwich_between_halves():
    for n in range(4, 25):
        n0, n1 = n // 2, (n + 1) // 2
        b = math.isqrt(n0)
        lower = _kernels.count_b_bounded(n0, b) * _kernels.count_b_bounded(n1, b)
        upper = _ballot_total(n0) * _ballot_total(n1)
        bn = count_bbs_dp(n)
        assert lower <= bn <= upper
