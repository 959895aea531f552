"""Exact enumeration of MSTD sets and bidirectional ballot sequences.

An MSTD ("more sums than differences") set is a finite set of integers S
with |S + S| > |S - S|. This package provides:

* exact bit-vector sumset/difference-set arithmetic (:mod:`mstdlab.intset`);
* the explicit dense MSTD family built from fixed end blocks and a
  majority-constrained middle (:mod:`mstdlab.construction`);
* ballot walks and the reflection machinery behind their counts
  (:mod:`mstdlab.walks`);
* two independent exact counting engines for bidirectional ballot
  sequences (:mod:`mstdlab.bbs`);
* numeric verification of the asymptotics (:mod:`mstdlab.asymptotics`);
* exhaustive and Monte Carlo MSTD density measurements
  (:mod:`mstdlab.density`).

The hot scan kernels have a compiled Cython core with a pure-Python
fallback selected at import; see :mod:`mstdlab._kernels`.
"""

from mstdlab._kernels import BACKEND as KERNEL_BACKEND
from mstdlab.bbs import (
    count_bbs_dp,
    count_bbs_exhaustive,
    count_bbs_reflection,
    enumerate_bbs,
    is_bbs,
)
from mstdlab.construction import construct, enumerate_family, left_fixture, right_fixture
from mstdlab.density import census, family_fraction, monte_carlo
from mstdlab.intset import IntSet, SignedIntSet, diffset, is_mstd, sumset
from mstdlab.walks import BitSeq, Walk, ballot_count, is_ballot

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "IntSet",
    "SignedIntSet",
    "sumset",
    "diffset",
    "is_mstd",
    "BitSeq",
    "Walk",
    "is_ballot",
    "ballot_count",
    "is_bbs",
    "enumerate_bbs",
    "count_bbs_dp",
    "count_bbs_reflection",
    "count_bbs_exhaustive",
    "left_fixture",
    "right_fixture",
    "construct",
    "enumerate_family",
    "census",
    "monte_carlo",
    "family_fraction",
    "__version__",
]
