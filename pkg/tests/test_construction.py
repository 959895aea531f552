import pytest

from mstdlab.bbs import count_bbs_dp, enumerate_bbs, is_bbs
from mstdlab.construction import (
    ConstructionParams,
    MajorityConditionError,
    MiddleOutOfRangeError,
    MiddleSet,
    WindowTooSmallError,
    construct,
    enumerate_family,
    has_majority_prefixes_suffixes,
    left_fixture,
    middle_sum_complete,
    right_fixture,
)
from mstdlab.intset import sumset
from oracles import diffset_naive, is_mstd_naive, sumset_naive


# --- fixtures ---------------------------------------------------------------


def test_left_fixture():
    L = left_fixture()
    assert sorted(L.members()) == [0, 2, 3, 7, 8, 9, 10]
    assert len(L) == 7
    assert sumset(L).members() == frozenset(range(21)) - {1}


def test_right_fixture():
    R = right_fixture(24)
    assert sorted(R.members()) == [13, 14, 15, 16, 18, 21, 22, 23]
    for n in (24, 31, 40):
        Rn = right_fixture(n)
        assert len(Rn) == 8
        assert sumset(Rn).members() == frozenset(range(2 * n - 22, 2 * n - 1))
    with pytest.raises(WindowTooSmallError):
        right_fixture(23)


def test_right_is_not_mirror_of_left():
    n = 24
    mirror = {n - 1 - x for x in left_fixture().members()}
    assert mirror != right_fixture(n).members()


# --- majority condition -----------------------------------------------------


def _majority_oracle(ms: MiddleSet) -> bool:
    m = ms.size
    cells = [ms.lo + i for i in range(m)]
    for k in range(1, m + 1):
        if sum(1 for x in cells[:k] if x in ms.members) * 2 <= k:
            return False
        if sum(1 for x in cells[m - k :] if x in ms.members) * 2 <= k:
            return False
    return True


def test_majority_examples():
    assert has_majority_prefixes_suffixes(MiddleSet.from_members(1, 5, range(1, 6)))
    assert has_majority_prefixes_suffixes(MiddleSet.from_members(1, 5, {1, 2, 4, 5}))
    assert not has_majority_prefixes_suffixes(MiddleSet.from_members(1, 5, {1, 3, 5}))


def test_majority_matches_hand_oracle():
    for m in range(1, 13):
        for mask in range(1 << m):
            ms = MiddleSet.from_members(1, m, {i + 1 for i in range(m) if (mask >> i) & 1})
            assert has_majority_prefixes_suffixes(ms) == _majority_oracle(ms)


def test_majority_equals_bbs_of_bitseq():
    # the bijection with bidirectional ballot sequences
    for m in range(1, 13):
        for mask in range(1 << m):
            ms = MiddleSet.from_members(7, m + 6, {i + 7 for i in range(m) if (mask >> i) & 1})
            assert has_majority_prefixes_suffixes(ms) == is_bbs(ms.as_bitseq())


# --- middle sum completeness ------------------------------------------------


def test_middle_sum_complete_examples():
    assert middle_sum_complete(MiddleSet.from_members(1, 5, range(1, 6)))
    assert middle_sum_complete(MiddleSet.from_members(1, 5, {1, 2, 4, 5}))
    assert not middle_sum_complete(MiddleSet.from_members(1, 5, {1, 3, 5}))
    assert not middle_sum_complete(MiddleSet.from_members(1, 5, frozenset()))


def test_middle_sum_complete_against_naive():
    for m in range(1, 11):
        for mask in range(1 << m):
            members = {i + 1 for i in range(m) if (mask >> i) & 1}
            ms = MiddleSet.from_members(1, m, members)
            want = sumset_naive(members) == set(range(2, 2 * m + 1)) if members else False
            assert middle_sum_complete(ms) == want


def test_majority_implies_sum_complete_exhaustive_small():
    for m in range(1, 15):
        for mask in range(1 << m):
            members = {i + 1 for i in range(m) if (mask >> i) & 1}
            ms = MiddleSet.from_members(1, m, members)
            if has_majority_prefixes_suffixes(ms):
                assert middle_sum_complete(ms)


def test_majority_implies_sum_complete_to_20():
    # only majority-true middles, reached directly through the bijection
    for m in range(15, 21):
        for seq in enumerate_bbs(m):
            ms = MiddleSet.from_bitseq(1, seq)
            assert middle_sum_complete(ms)


# --- construct ---------------------------------------------------------------


def test_construct_smallest_window():
    s = construct(24, MiddleSet.from_members(11, 12, {11, 12}))
    members = sorted(s.members())
    assert members == [0, 2, 3, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 21, 22, 23]
    assert is_mstd_naive(members)
    assert len(sumset_naive(members)) == 2 * 24 - 2
    assert 24 - 7 not in diffset_naive(members)


def test_construct_accepts_plain_iterables():
    assert construct(24, [11, 12]) == construct(24, MiddleSet.from_members(11, 12, {11, 12}))


def test_construct_error_codes():
    with pytest.raises(WindowTooSmallError):
        construct(23, [11])
    with pytest.raises(MiddleOutOfRangeError):
        construct(24, [10, 11, 12])
    with pytest.raises(MiddleOutOfRangeError):
        construct(24, MiddleSet.from_members(11, 13, {11, 12, 13}))
    with pytest.raises(MajorityConditionError):
        construct(26, [11, 13])
    with pytest.raises(WindowTooSmallError):
        ConstructionParams(23)


def test_construct_params_intervals():
    p = ConstructionParams(30)
    assert (p.middle_lo, p.middle_hi, p.middle_len) == (11, 18, 8)


# --- enumerate_family -------------------------------------------------------


@pytest.mark.parametrize("n,size", [(24, 1), (29, 5), (34, 91)])
def test_family_sizes(n, size):
    assert sum(1 for _ in enumerate_family(n)) == size


def test_family_small_window_all_verified():
    fam = list(enumerate_family(29))
    assert len(fam) == 5
    seen = set()
    for s in fam:
        members = sorted(s.members())
        assert is_mstd_naive(members)
        assert len(sumset_naive(members)) == 2 * 29 - 2
        assert max(diffset_naive(members)) <= 28 and 29 - 7 not in diffset_naive(members)
        assert 0 in s and 28 in s
        seen.add(tuple(members))
    assert len(seen) == 5


def test_family_matches_bbs_bijection():
    n = 31
    seqs = list(enumerate_bbs(n - 22))
    fam = list(enumerate_family(n))
    assert len(fam) == len(seqs) == count_bbs_dp(n - 22)
    for seq, s in zip(seqs, fam):
        middle = {11 + j for j, bit in enumerate(seq) if bit}
        assert s.members() & set(range(11, n - 11)) == middle


def test_family_rejects_small_window():
    with pytest.raises(WindowTooSmallError):
        next(enumerate_family(23))


def test_family_no_duplicates_and_endpoints():
    for n in range(24, 33):
        seen = set()
        for s in enumerate_family(n):
            assert 0 in s and n - 1 in s
            assert s.bits not in seen
            seen.add(s.bits)
