import pytest
from hypothesis import given
from hypothesis import strategies as st

from mstdlab.intset import IntSet, SignedIntSet, diffset, is_mstd, sumset
from oracles import diffset_naive, is_mstd_naive, sumset_naive

CONWAY = [0, 2, 3, 4, 7, 11, 12, 14]


@st.composite
def intsets(draw, max_window=20):
    n = draw(st.integers(1, max_window))
    members = draw(st.sets(st.integers(0, n - 1)))
    return IntSet.from_members(members, n)


# --- sumset -----------------------------------------------------------------


@pytest.mark.parametrize("k", range(6))
def test_interval_sumset(k):
    s = IntSet.from_members(range(k + 1), k + 1)
    out = sumset(s)
    assert out.members() == frozenset(range(2 * k + 1))
    assert len(out) == 2 * k + 1


def test_sumset_empty():
    assert len(sumset(IntSet(5, 0))) == 0


def test_sumset_left_block():
    s = IntSet.from_members([0, 2, 3, 7, 8, 9, 10], 11)
    assert sumset(s).members() == frozenset(range(21)) - {1}


# --- diffset ----------------------------------------------------------------


def test_diffset_two_elements():
    assert diffset(IntSet.from_members([0, 2], 3)).members() == {-2, 0, 2}


def test_diffset_empty():
    d = diffset(IntSet(4, 0))
    assert len(d) == 0
    assert 0 not in d


def test_diffset_conway():
    d = diffset(IntSet.from_members(CONWAY, 15))
    assert len(d) == 25
    assert d.members() == frozenset(diffset_naive(CONWAY))


# --- is_mstd ----------------------------------------------------------------


def test_conway_is_mstd():
    s = IntSet.from_members(CONWAY, 15)
    assert len(sumset(s)) == 26
    assert len(diffset(s)) == 25
    assert is_mstd(s)


def test_progression_not_mstd():
    assert not is_mstd(IntSet.from_members([0, 1, 2], 3))


def test_empty_not_mstd():
    assert not is_mstd(IntSet(1, 0))


# --- invariants -------------------------------------------------------------


@given(intsets())
def test_diffset_symmetry(s):
    d = diffset(s)
    members = d.members()
    assert members == frozenset(-x for x in members)
    if len(s):
        assert len(d) % 2 == 1
        assert 0 in d


@given(intsets())
def test_size_bounds(s):
    k = len(s)
    if k == 0:
        return
    n = s.window_size
    ns, nd = len(sumset(s)), len(diffset(s))
    assert 2 * k - 1 <= ns <= min(k * (k + 1) // 2, 2 * n - 1)
    assert 2 * k - 1 <= nd <= min(k * (k - 1) + 1, 2 * n - 1)


@given(intsets(), st.integers(0, 6))
def test_translation_invariance(s, c):
    if len(s) == 0 or s.bits.bit_length() - 1 + c >= s.window_size:
        return
    t = IntSet(s.window_size, s.bits << c)
    assert len(sumset(t)) == len(sumset(s))
    assert len(diffset(t)) == len(diffset(s))
    assert is_mstd(t) == is_mstd(s)


@given(intsets())
def test_reflection_invariance(s):
    assert is_mstd(s.reflect()) == is_mstd(s)


def test_oracle_equivalence_all_small_windows():
    # every subset of every window up to size 12
    for n in range(1, 13):
        for mask in range(1 << n):
            s = IntSet(n, mask)
            members = sorted(s.members())
            assert sumset(s).members() == frozenset(sumset_naive(members))
            assert diffset(s).members() == frozenset(diffset_naive(members))
            assert is_mstd(s) == is_mstd_naive(members)


# --- value semantics --------------------------------------------------------


def test_extensional_equality():
    a = IntSet.from_members([1, 3], 5)
    b = IntSet.from_members([1, 3], 9)
    assert a == b and hash(a) == hash(b)
    assert SignedIntSet.from_members([-1, 2], -3, 3) == SignedIntSet.from_members([-1, 2], -1, 2)


def test_window_validation():
    with pytest.raises(ValueError):
        IntSet(0, 0)
    with pytest.raises(ValueError):
        IntSet.from_members([5], 5)
    with pytest.raises(ValueError):
        SignedIntSet(3, 2, 0)


def test_shift_out_of_window():
    s = IntSet.from_members([6], 8)
    with pytest.raises(ValueError):
        s.shift(2)
    assert s.shift(1).members() == {7}
    assert s.shift(-6).members() == {0}
