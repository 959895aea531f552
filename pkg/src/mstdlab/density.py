"""MSTD density: exhaustive census and seeded Monte Carlo estimation.

The census counts MSTD subsets over every mask of a window exactly; the
Monte Carlo path samples uniform subsets (each element independently with
probability 1/2) and reports a binomial proportion estimate with a 95%
Wilson interval. Reproducibility is a hard requirement: the generator is
SplitMix64, samples are drawn in fixed blocks with per-block derived
seeds, and the generator name and seed travel inside every result record,
so identical (n, samples, seed) give identical output bit for bit,
regardless of thread count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from mstdlab import _kernels
from mstdlab.bbs import count_bbs_reflection

__all__ = [
    "DEFAULT_CENSUS_LIMIT",
    "GENERATOR_NAME",
    "DensityEstimate",
    "census",
    "monte_carlo",
    "family_fraction",
]

DEFAULT_CENSUS_LIMIT = 26
GENERATOR_NAME = f"splitmix64-block{_kernels.MC_BLOCK}"

_Z95 = 1.959963984540054
_SEED_MASK = (1 << 64) - 1

CSV_FIELDS = ("n", "mode", "mstd_count", "total", "rho", "ci_low", "ci_high", "seed", "generator")


@dataclass(frozen=True)
class DensityEstimate:
    """An exact census result or a Monte Carlo density estimate.

    ``rho`` is the exact hit fraction (a Fraction in both modes); the
    confidence interval, seed and generator name are present only for
    Monte Carlo records.
    """

    n: int
    mode: str  # "exhaustive" | "monte_carlo"
    mstd_count: int
    total: int
    rho: Fraction
    ci95: tuple[float, float] | None = None
    seed: int | None = None
    generator: str | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "mstd_count": self.mstd_count,
            "total": self.total,
            "rho": float(self.rho),
            "ci95": list(self.ci95) if self.ci95 is not None else None,
            "seed": self.seed,
            "generator": self.generator,
        }

    def csv_row(self) -> list[str]:
        ci = self.ci95
        return [
            str(self.n),
            self.mode,
            str(self.mstd_count),
            str(self.total),
            repr(float(self.rho)),
            repr(ci[0]) if ci else "",
            repr(ci[1]) if ci else "",
            str(self.seed) if self.seed is not None else "",
            self.generator or "",
        ]


def _wilson_ci95(hits: int, total: int) -> tuple[float, float]:
    """95% Wilson score interval; always inside [0, 1] and always contains
    the point estimate hits/total."""
    z = _Z95
    p = hits / total
    denom = 1 + z * z / total
    center = (p + z * z / (2 * total)) / denom
    half = z * math.sqrt(p * (1 - p) / total + z * z / (4 * total * total)) / denom
    # containment of p is exact in real arithmetic; make it exact in floats too
    return (min(max(0.0, center - half), p), max(min(1.0, center + half), p))


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("MSTDLAB_THREADS", "1"))
    return max(1, threads)


def census(n: int, *, limit: int | None = None, threads: int | None = None) -> DensityEstimate:
    """Exact count of MSTD subsets over all 2**n masks of [0, n-1].

    Refuses windows above the configured exhaustive limit (default 26;
    cost, not correctness, is the constraint) and directs the caller to
    monte_carlo instead. The mask range is partitioned into chunks, so
    threading changes nothing but wall time.
    """
    if limit is None:
        limit = int(os.environ.get("MSTDLAB_CENSUS_LIMIT", str(DEFAULT_CENSUS_LIMIT)))
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise ValueError(
            f"census over 2^{n} subsets exceeds the exhaustive limit {limit}; "
            "use monte_carlo for windows this large"
        )
    threads = _resolve_threads(threads)
    total = 1 << n
    if n > 32:
        # beyond the single-word kernels; exact but very slow
        count = sum(1 for mask in range(total) if _mask_is_mstd(mask, n))
    elif threads == 1 or total < (1 << 16):
        count = _kernels.census_mstd_count(n, 0, total)
    else:
        chunks = []
        step = -(-total // (threads * 8))
        lo = 0
        while lo < total:
            chunks.append((lo, min(lo + step, total)))
            lo += step
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda c: _kernels.census_mstd_count(n, c[0], c[1]), chunks)
            count = sum(parts)
    return DensityEstimate(
        n=n, mode="exhaustive", mstd_count=count, total=total, rho=Fraction(count, total)
    )


def _mask_is_mstd(mask: int, n: int) -> bool:
    s, d = _kernels.sumdiff_sizes(mask, n)
    return s > d


def monte_carlo(
    n: int, samples: int, seed: int, *, threads: int | None = None
) -> DensityEstimate:
    """Monte Carlo estimate of the MSTD density over windows of size n.

    Draws ``samples`` uniform subsets, counts MSTD hits, and returns the
    estimate with a 95% binomial (Wilson) interval. Identical
    (n, samples, seed) give identical results for any thread count.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    seed &= _SEED_MASK
    threads = _resolve_threads(threads)
    block = _kernels.MC_BLOCK
    tasks = [
        (i, min(block, samples - i * block))
        for i in range((samples + block - 1) // block)
    ]
    if threads == 1:
        hits = sum(_kernels.mc_block_hits(n, seed, i, cnt) for i, cnt in tasks)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hits = sum(pool.map(lambda t: _kernels.mc_block_hits(n, seed, t[0], t[1]), tasks))
    return DensityEstimate(
        n=n,
        mode="monte_carlo",
        mstd_count=hits,
        total=samples,
        rho=Fraction(hits, samples),
        ci95=_wilson_ci95(hits, samples),
        seed=seed,
        generator=GENERATOR_NAME,
    )


def family_fraction(n: int) -> Fraction:
    """Size of the constructed MSTD family for window n, as an exact
    fraction of all 2**n subsets: (BBS count at length n-22) / 2^n."""
    if n < 24:
        raise ValueError("the construction requires n >= 24")
    return Fraction(count_bbs_reflection(n - 22), 1 << n)
