import math
from fractions import Fraction

import pytest

from mstdlab import asymptotics
from mstdlab._kernels import pure
from mstdlab.asymptotics import (
    conjecture_residual,
    normal_approx_check,
    normal_limit,
    one_sided_min_prob,
    random_walk_pn,
    ratio_exact,
    ratio_table,
)
from mstdlab.golden import BBS_COUNTS, RATIO_PREFIXES


# --- ratio table ------------------------------------------------------------


def test_ratio_exact_small():
    # n = 12: 12 * 91 / 2^10
    assert ratio_exact(12) == Fraction(12 * BBS_COUNTS[12], 2**10)
    assert ratio_exact(1) == Fraction(4 * 1 * 1, 2)


@pytest.mark.parametrize("n", [100, 1000])
def test_ratio_matches_golden_digits(n):
    prefix = RATIO_PREFIXES[n]
    digits = len(prefix.partition(".")[2])
    rv = ratio_table([n], digits)[0]
    assert rv.decimal == prefix


def test_ratio_rendering_round_trips():
    for n in (10, 100, 500):
        for digits in (6, 10, 14):
            rv = ratio_table([n], digits)[0]
            parsed = Fraction(rv.decimal)
            assert abs(parsed - rv.exact) <= Fraction(1, 2 * 10**digits)


def test_ratio_decreasing_above_one():
    values = [ratio_exact(n) for n in (50, 100, 200, 400, 800, 1600, 2000)]
    assert all(v > 1 for v in values)
    assert all(a > b for a, b in zip(values, values[1:]))


def test_ratio_rejects():
    with pytest.raises(ValueError):
        ratio_exact(0)
    with pytest.raises(ValueError):
        asymptotics._decimal_render(Fraction(1), 0)


# --- normal approximation ---------------------------------------------------


def test_normal_limit_value():
    assert math.isclose(normal_limit(0.0), math.sqrt(2 / math.pi))


def test_normal_approx_converges_at_center():
    value = normal_approx_check(10**6, 0.0)
    limit = normal_limit(0.0)
    assert abs(value - limit) / limit < 1e-3


def test_normal_approx_converges_off_center():
    value = normal_approx_check(10**6, 1.0)
    limit = normal_limit(1.0)
    assert abs(value - limit) / limit < 1e-2


def test_normal_approx_error_decreases():
    # strictly monotone at t = 0, where the binomial index is exact; for
    # t != 0 the index rounding jitters the effective t by ~1/sqrt(n), so
    # only the overall decay is asserted
    grid = (100, 1000, 10000, 100000, 1000000)
    limit = normal_limit(0.0)
    errs = [abs(normal_approx_check(n, 0.0) - limit) / limit for n in grid]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    limit = normal_limit(0.5)
    errs = [abs(normal_approx_check(n, 0.5) - limit) / limit for n in grid]
    assert errs[-1] < errs[0] / 100


def test_normal_approx_symmetric_in_t():
    assert normal_approx_check(100, 1.0) == normal_approx_check(100, -1.0)
    assert normal_approx_check(400, 0.5) == normal_approx_check(400, -0.5)


def test_normal_approx_lgamma_path_matches_exact():
    # force the Stirling path where the exact path is still affordable
    exact = normal_approx_check(20000, 0.5)
    old = asymptotics._EXACT_BINOMIAL_LIMIT
    try:
        asymptotics._EXACT_BINOMIAL_LIMIT = 10
        stirling = normal_approx_check(20000, 0.5)
    finally:
        asymptotics._EXACT_BINOMIAL_LIMIT = old
    assert math.isclose(exact, stirling, rel_tol=1e-12)


def test_normal_approx_rejects():
    with pytest.raises(ValueError):
        normal_approx_check(1, 0.0)
    with pytest.raises(ValueError):
        normal_approx_check(100, 50.0)  # index beyond n


# --- conjectured expansion ---------------------------------------------------


def test_conjecture_residuals_bounded():
    # recorded regression bound from computed values (~0.150 .. 0.156)
    for n in (100, 200, 400, 800, 1600):
        assert 0.0 < conjecture_residual(n) < 0.2


def test_conjecture_first_and_second_order():
    n = 1600
    b = Fraction(asymptotics.count_bbs_reflection(n), 1 << n)
    first = float(n * b)
    assert abs(first - 0.25) / 0.25 < 0.01
    second = float(n * n * (b - Fraction(1, 4 * n)))
    assert abs(second - 1 / 6) / (1 / 6) < 0.10


# --- random-walk probability -------------------------------------------------


def test_pn_exact_value():
    assert random_walk_pn(10) == Fraction(91, 1024)


def test_n_times_pn_converges():
    assert abs(float(1600 * random_walk_pn(1600)) - 1.0) < 0.01


def test_pn_monte_carlo_agreement():
    # seeded simulation of one million 20-step walks; the hit test (start
    # never undercut, end never topped) is evaluated per walk
    n, samples, seed = 20, 10**6, 2026
    exact = random_walk_pn(n)  # 49113 / 2^20
    assert exact == Fraction(49113, 1 << 20)
    rng = pure.SplitMix64(pure.mix64(seed))
    hits = 0
    for _ in range(samples):
        mask = rng.next64() & ((1 << n) - 1)
        h = 0
        hmax = 0
        ok = True
        for j in range(n):
            h += 1 if (mask >> j) & 1 else -1
            if h < 0:
                ok = False
                break
            if h > hmax:
                hmax = h
        if ok and h == hmax:
            hits += 1
    p_hat = hits / samples
    sigma = math.sqrt(float(exact) * (1 - float(exact)) / samples)
    assert abs(p_hat - float(exact)) <= 3 * sigma


# --- one-sided minimum -------------------------------------------------------


def test_one_sided_matches_scan():
    for n in range(1, 19):
        want = 0
        for mask in range(1 << n):
            h = 0
            ok = True
            for j in range(n):
                h += 1 if (mask >> j) & 1 else -1
                if h < 0:
                    ok = False
                    break
            want += ok
        assert one_sided_min_prob(n) == Fraction(want, 1 << n)
    assert one_sided_min_prob(2) == Fraction(1, 2)


def test_one_sided_footnote_scaling():
    n = 10**4
    scaled = math.sqrt(math.pi * n / 2) * float(one_sided_min_prob(n))
    assert abs(scaled - 1.0) < 0.01
