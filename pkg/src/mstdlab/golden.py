"""Golden reference values the CLI verification subcommands diff against.

BBS_COUNTS holds the bidirectional ballot counts for lengths 1..24;
RATIO_PREFIXES holds the leading decimal digits of n * B_n / 2^(n-2) at
selected n. Data only; nothing here is computed.
"""

from __future__ import annotations

# length n -> count, n = 1..24
BBS_COUNTS: dict[int, int] = {
    1: 1,
    2: 1,
    3: 1,
    4: 1,
    5: 2,
    6: 3,
    7: 5,
    8: 9,
    9: 15,
    10: 28,
    11: 49,
    12: 91,
    13: 166,
    14: 307,
    15: 574,
    16: 1065,
    17: 2016,
    18: 3769,
    19: 7176,
    20: 13532,
    21: 25842,
    22: 49113,
    23: 93995,
    24: 179775,
}

# n -> leading digits of the exact ratio n * B_n / 2^(n-2)
RATIO_PREFIXES: dict[int, str] = {
    100: "1.0067268",
    1000: "1.00066729",
    10000: "1.0000666729",
}
