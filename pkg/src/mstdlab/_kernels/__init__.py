"""Kernel backend selection.

The hot scan loops have two interchangeable implementations: a Cython
extension (``_fastcore``) compiled at install time, and the pure-Python
reference in :mod:`mstdlab._kernels.pure`. The compiled backend is picked
at import when present; set ``MSTDLAB_FORCE_PURE=1`` to insist on the pure
fallback (useful for benchmarking and differential testing).

Both backends expose the same functions with identical results, including
bit-for-bit identical Monte Carlo streams.
"""

from __future__ import annotations

import os

from mstdlab._kernels.pure import MC_BLOCK, SplitMix64, block_rng, mix64

__all__ = [
    "BACKEND",
    "MC_BLOCK",
    "SplitMix64",
    "block_rng",
    "mix64",
    "sumdiff_sizes",
    "census_mstd_count",
    "mc_block_hits",
    "count_bbs_exhaustive",
    "count_b_bounded",
    "b_bounded_masks",
    "concat_pairs_not_bbs",
]

if os.environ.get("MSTDLAB_FORCE_PURE"):
    _impl = None
else:
    try:
        from mstdlab._kernels import _fastcore as _impl
    except ImportError:
        _impl = None

if _impl is None:
    from mstdlab._kernels import pure as _impl  # type: ignore[no-redef]

    BACKEND = "pure"
else:
    BACKEND = "compiled"

sumdiff_sizes = _impl.sumdiff_sizes
census_mstd_count = _impl.census_mstd_count
mc_block_hits = _impl.mc_block_hits
count_bbs_exhaustive = _impl.count_bbs_exhaustive
count_b_bounded = _impl.count_b_bounded
b_bounded_masks = _impl.b_bounded_masks
concat_pairs_not_bbs = _impl.concat_pairs_not_bbs
