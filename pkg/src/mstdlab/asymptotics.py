"""Numeric checks of asymptotic behavior, driven by exact counts.

Everything that can be exact is exact: ratios like n * B_n / 2^(n-2) are
Fractions rendered to correctly rounded decimal strings, never floats.
Floating evaluation appears only where exact arithmetic is infeasible
(binomials at n around 10^6), and there it runs through a Decimal
Stirling-series log-gamma at 40-digit working precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from mstdlab.bbs import count_bbs_reflection

__all__ = [
    "RatioValue",
    "ratio_exact",
    "ratio_table",
    "normal_approx_check",
    "normal_limit",
    "conjecture_residual",
    "random_walk_pn",
    "one_sided_min_prob",
]

_PREC = 40
_PI = Decimal("3.14159265358979323846264338327950288419716939937511")
# Stirling series coefficients B_{2k} / (2k (2k-1)) for k = 1..8
_STIRLING = (
    Fraction(1, 12),
    Fraction(-1, 360),
    Fraction(1, 1260),
    Fraction(-1, 1680),
    Fraction(1, 1188),
    Fraction(-691, 360360),
    Fraction(1, 156),
    Fraction(-3617, 122400),
)
# below this, exact big-integer binomials are cheap enough
_EXACT_BINOMIAL_LIMIT = 20000


@dataclass(frozen=True)
class RatioValue:
    """An exact ratio n * B_n / 2^(n-2) with its decimal rendering.

    The rendering is correctly rounded (half to even) from the exact
    rational, never produced through floating point.
    """

    n: int
    exact: Fraction
    decimal: str


def _decimal_render(value: Fraction, digits: int) -> str:
    """Correctly rounded fixed-point rendering of a nonnegative rational."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    num, den = value.numerator, value.denominator
    q, rem = divmod(num * 10**digits, den)
    if 2 * rem > den or (2 * rem == den and q % 2):
        q += 1
    text = str(q).rjust(digits + 1, "0")
    return f"{text[:-digits]}.{text[-digits:]}"


def ratio_exact(n: int) -> Fraction:
    """The exact rational n * B_n / 2^(n-2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(4 * n * count_bbs_reflection(n), 1 << n)


def ratio_table(ns: list[int], digits: int = 10) -> list[RatioValue]:
    """Exact ratios n * B_n / 2^(n-2), rendered to `digits` decimals."""
    out = []
    for n in ns:
        exact = ratio_exact(n)
        out.append(RatioValue(n, exact, _decimal_render(exact, digits)))
    return out


def _lgamma_dec(z: int) -> Decimal:
    """ln Gamma(z) for integer z >= 1, via the Stirling series in Decimal
    arithmetic (the working precision comes from the ambient context).

    Small arguments are pushed up with ln Gamma(z) = ln Gamma(z+1) - ln z
    until the series converges well past the working precision.
    """
    if z < 1:
        raise ValueError("z must be >= 1")
    shift = Decimal(0)
    while z < 64:
        shift -= Decimal(z).ln()
        z += 1
    zd = Decimal(z)
    half_ln_2pi = (2 * _PI).ln() / 2
    total = (zd - Decimal(1) / 2) * zd.ln() - zd + half_ln_2pi
    zpow = zd
    z2 = zd * zd
    for coeff in _STIRLING:
        total += Decimal(coeff.numerator) / (Decimal(coeff.denominator) * zpow)
        zpow *= z2
    return total + shift


def normal_limit(t: float) -> float:
    """The limiting value sqrt(2/pi) * exp(-t^2 / 2)."""
    return math.sqrt(2 / math.pi) * math.exp(-t * t / 2)


def normal_approx_check(n: int, t: float) -> float:
    """The finite-n quantity sqrt(n)/2^n * C(n, round((n + t sqrt(n))/2)).

    Converges to sqrt(2/pi) * exp(-t^2/2) as n grows. Evaluated exactly
    for moderate n and through the Decimal log-gamma for large n; the
    high-precision value is returned as a float.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    k = round((n + t * math.sqrt(n)) / 2)
    if not 0 <= k <= n:
        raise ValueError("binomial index (n + t sqrt(n))/2 is outside [0, n]")
    with localcontext() as ctx:
        ctx.prec = _PREC
        if n <= _EXACT_BINOMIAL_LIMIT:
            value = Decimal(math.comb(n, k)) * Decimal(n).sqrt() / Decimal(2) ** n
        else:
            ln_value = (
                _lgamma_dec(n + 1)
                - _lgamma_dec(k + 1)
                - _lgamma_dec(n - k + 1)
                + Decimal(n).ln() / 2
                - n * Decimal(2).ln()
            )
            value = ln_value.exp()
    return float(value)


def conjecture_residual(n: int) -> float:
    """n^3 * (B_n / 2^n - 1/(4n) - 1/(6n^2)), from the exact count.

    If B_n / 2^n = 1/(4n) + 1/(6n^2) + O(1/n^3) holds, these residuals
    stay bounded as n grows.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    err = (
        Fraction(count_bbs_reflection(n), 1 << n)
        - Fraction(1, 4 * n)
        - Fraction(1, 6 * n * n)
    )
    return float(n**3 * err)


def random_walk_pn(n: int) -> Fraction:
    """Exact probability that an n-step simple random walk has its start
    as a minimum and its end as a maximum of the visited points: equals
    (BBS count at length n+2) / 2^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(count_bbs_reflection(n + 2), 1 << n)


def one_sided_min_prob(n: int) -> Fraction:
    """Exact probability that an n-step walk never goes below its start
    (non-strict minimum at the origin): C(n, floor(n/2)) / 2^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(math.comb(n, n // 2), 1 << n)
