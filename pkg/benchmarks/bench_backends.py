"""Benchmark the compiled scan kernels against the pure-Python fallback.

Runs each hot kernel through both backends on identical inputs, checks
that the results agree, and prints a timing table.

    python benchmarks/bench_backends.py [--full]

The --full sizes roughly match what the acceptance suite leans on; the
default sizes keep the pure fallback under a minute.
"""

from __future__ import annotations

import argparse
import time

from mstdlab._kernels import pure

try:
    from mstdlab._kernels import _fastcore as fast
except ImportError:
    fast = None


def _time(fn, *args):
    t0 = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - t0


def _cases(full: bool):
    census_n = 22 if full else 18
    mc_samples = 200_000 if full else 20_000
    bbs_n = 22 if full else 18
    bnd_n = 18 if full else 16
    pair_masks_n, pair_b = (16, 3) if full else (14, 2)
    masks = pure.b_bounded_masks(pair_masks_n, pair_b)
    return [
        (f"census n={census_n}", "census_mstd_count", (census_n, 0, 1 << census_n)),
        (f"monte carlo n=100, {mc_samples} samples", "mc_block_hits", (100, 1, 0, mc_samples)),
        (f"bbs exhaustive filter n={bbs_n}", "count_bbs_exhaustive", (bbs_n,)),
        (f"b-bounded count n={bnd_n}, b=3", "count_b_bounded", (bnd_n, 3)),
        (
            f"concat pair sweep {len(masks)}^2 pairs",
            "concat_pairs_not_bbs",
            (masks, pair_masks_n, masks, pair_masks_n),
        ),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="larger workloads")
    args = parser.parse_args()

    if fast is None:
        print("compiled kernels not built; timing the pure backend only\n")

    width = 46
    header = f"{'kernel':<{width}} {'pure':>10} {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, name, fn_args in _cases(args.full):
        pure_result, pure_t = _time(getattr(pure, name), *fn_args)
        if fast is None:
            print(f"{label:<{width}} {pure_t:>9.3f}s {'-':>10} {'-':>9}")
            continue
        fast_result, fast_t = _time(getattr(fast, name), *fn_args)
        assert pure_result == fast_result, f"{name}: backends disagree"
        speedup = pure_t / fast_t if fast_t > 0 else float("inf")
        print(f"{label:<{width}} {pure_t:>9.3f}s {fast_t:>9.3f}s {speedup:>8.1f}x")


if __name__ == "__main__":
    main()
