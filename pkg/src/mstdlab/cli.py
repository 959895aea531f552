"""Command-line front end.

Every table and check the library can reproduce is reachable from here,
with CSV output by default (header row, comma separated, numeric fields)
or one JSON object per line under ``--json``. Exit codes: 0 success, 1
usage error, 2 for results that computed fine but contradict the embedded
golden data (CI needs that distinction).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from mstdlab import asymptotics, bbs, density, golden
from mstdlab.construction import ConstructionError, construct, enumerate_family
from mstdlab.intset import IntSet, diffset, is_mstd, sumset

SCHEMA_VERSION = 1

_EXIT_OK = 0
_EXIT_USAGE = 1
_EXIT_VERIFY = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A002 - argparse API
        raise _UsageError(f"{message}\n{self.format_usage()}".rstrip())


def _parse_range(text: str) -> list[int]:
    """'A..B' (inclusive) or a single 'N'."""
    if ".." in text:
        a, _, b = text.partition("..")
        lo, hi = int(a), int(b)
        if lo > hi:
            raise _UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _parse_int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part != ""]


def _emit(args, header: list[str], rows: list[list], objs: list[dict]) -> None:
    if args.json:
        for obj in objs:
            print(json.dumps(obj))
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(str(x) for x in row))


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("MSTDLAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _bool_str(value: bool) -> str:
    return "true" if value else "false"


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_bbs_count(args) -> int:
    ns = _parse_range(args.n)
    engine = args.engine
    rows, objs = [], []
    mismatch = False
    dp_counts = None
    if engine in ("dp", "both") and ns:
        dp_counts = bbs.count_bbs_dp_through(max(ns))
    for n in ns:
        if engine == "dp":
            count = dp_counts[n]
            rows.append([n, count])
            objs.append({"n": n, "count": count, "engine": "dp"})
        elif engine == "reflection":
            count = bbs.count_bbs_reflection(n)
            rows.append([n, count])
            objs.append({"n": n, "count": count, "engine": "reflection"})
        else:
            c_dp = dp_counts[n]
            c_refl = bbs.count_bbs_reflection(n)
            equal = c_dp == c_refl
            mismatch |= not equal
            rows.append([n, c_dp, c_refl, _bool_str(equal)])
            objs.append({"n": n, "count_dp": c_dp, "count_reflection": c_refl, "equal": equal})
    if engine == "both":
        _emit(args, ["n", "count_dp", "count_reflection", "equal"], rows, objs)
    else:
        _emit(args, ["n", "count"], rows, objs)
    return _EXIT_VERIFY if mismatch else _EXIT_OK


def _cmd_bbs_list(args) -> int:
    rows, objs = [], []
    for seq in bbs.enumerate_bbs(args.n):
        rows.append([str(seq)])
        objs.append({"sequence": str(seq)})
    _emit(args, ["sequence"], rows, objs)
    return _EXIT_OK


def _cmd_table1(args) -> int:
    dp_counts = bbs.count_bbs_dp_through(24)
    rows, objs = [], []
    ok_all = True
    for n in range(1, 25):
        c_dp = dp_counts[n]
        c_refl = bbs.count_bbs_reflection(n)
        want = golden.BBS_COUNTS[n]
        ok = c_dp == want and c_refl == want
        ok_all &= ok
        rows.append([n, c_dp, c_refl, want, _bool_str(ok)])
        objs.append(
            {"n": n, "count_dp": c_dp, "count_reflection": c_refl, "golden": want, "ok": ok}
        )
    _emit(args, ["n", "count_dp", "count_reflection", "golden", "ok"], rows, objs)
    return _EXIT_OK if ok_all else _EXIT_VERIFY


def _cmd_table2(args) -> int:
    ns = _parse_int_list(args.n)
    table = asymptotics.ratio_table(ns, args.digits)
    rows, objs = [], []
    failed = False
    for rv in table:
        prefix = golden.RATIO_PREFIXES.get(rv.n, "")
        if prefix:
            # golden digits are rounded, so compare a rendering at exactly
            # the golden precision rather than a string prefix
            at_golden = asymptotics.ratio_table([rv.n], len(prefix.partition(".")[2]))[0]
            ok = _bool_str(at_golden.decimal == prefix)
            failed |= ok == "false"
        else:
            ok = ""
        rows.append([rv.n, rv.decimal, prefix, ok])
        objs.append(
            {
                "n": rv.n,
                "ratio": rv.decimal,
                "golden_prefix": prefix or None,
                "ok": None if ok == "" else ok == "true",
            }
        )
    _emit(args, ["n", "ratio", "golden_prefix", "ok"], rows, objs)
    return _EXIT_VERIFY if failed else _EXIT_OK


def _cmd_mstd_check(args) -> int:
    members = _parse_int_list(args.set)
    s = IntSet.from_members(members) if members else IntSet(1, 0)
    n_sum = len(sumset(s))
    n_diff = len(diffset(s))
    verdict = is_mstd(s)
    if args.json:
        print(json.dumps({"sum": n_sum, "diff": n_diff, "mstd": verdict}))
    else:
        print(f"sum={n_sum} diff={n_diff} mstd={_bool_str(verdict)}")
    return _EXIT_OK


def _naive_is_mstd(members: list[int]) -> bool:
    # independent of the bit-vector kernel on purpose
    sums = {a + b for a in members for b in members}
    diffs = {a - b for a in members for b in members}
    return len(sums) > len(diffs)


def _cmd_construct(args) -> int:
    members_dump: list[list[int]] = []
    count = 0
    verified = 0
    for s in enumerate_family(args.n):
        count += 1
        if args.list:
            members_dump.append(sorted(s.members()))
        if args.verify and _naive_is_mstd(sorted(s.members())):
            verified += 1
    if args.json:
        head: dict = {"n": args.n, "family": count}
        if args.verify:
            head["verified"] = verified
        print(json.dumps(head))
        for mem in members_dump:
            print(json.dumps({"set": mem}))
    else:
        if args.verify:
            print(f"family={count} verified={verified}")
        else:
            print(f"family={count}")
        for mem in members_dump:
            print(",".join(map(str, mem)))
    return _EXIT_VERIFY if args.verify and verified != count else _EXIT_OK


def _cmd_density(args) -> int:
    if args.density_cmd == "census":
        est = density.census(args.n, threads=_threads(args))
    else:
        est = density.monte_carlo(args.n, args.samples, args.seed, threads=_threads(args))
    if args.json:
        print(json.dumps(est.to_dict()))
    else:
        print(",".join(density.CSV_FIELDS))
        print(",".join(est.csv_row()))
    return _EXIT_OK


def _cmd_asymptotics(args) -> int:
    which = args.which
    rows, objs = [], []
    if which == "normal":
        grid = _parse_int_list(args.grid) if args.grid else [100, 10000, 1000000]
        limit = asymptotics.normal_limit(args.t)
        for n in grid:
            value = asymptotics.normal_approx_check(n, args.t)
            rel = abs(value - limit) / limit
            rows.append([n, args.t, repr(value), repr(limit), repr(rel)])
            objs.append({"n": n, "t": args.t, "value": value, "limit": limit, "rel_error": rel})
        _emit(args, ["n", "t", "value", "limit", "rel_error"], rows, objs)
    elif which == "conjecture":
        grid = _parse_int_list(args.grid) if args.grid else [100, 200, 400, 800, 1600]
        for n in grid:
            b = bbs.count_bbs_reflection(n)
            first = float(Fraction(n * b, 1 << n))
            second = float(n * n * (Fraction(b, 1 << n) - Fraction(1, 4 * n)))
            residual = asymptotics.conjecture_residual(n)
            rows.append([n, repr(first), repr(second), repr(residual)])
            objs.append(
                {"n": n, "first_order": first, "second_order": second, "residual": residual}
            )
        _emit(args, ["n", "first_order", "second_order", "residual"], rows, objs)
    elif which == "pn":
        grid = _parse_int_list(args.grid) if args.grid else [10, 100, 400]
        for n in grid:
            pn = asymptotics.random_walk_pn(n)
            rows.append([n, repr(float(pn)), repr(float(n * pn))])
            objs.append(
                {"n": n, "pn": str(pn), "pn_float": float(pn), "n_times_pn": float(n * pn)}
            )
        _emit(args, ["n", "pn", "n_times_pn"], rows, objs)
    else:  # footnote
        grid = _parse_int_list(args.grid) if args.grid else [100, 10000]
        for n in grid:
            p = asymptotics.one_sided_min_prob(n)
            scaled = math.sqrt(math.pi * n / 2) * float(p)
            rows.append([n, repr(float(p)), repr(scaled)])
            objs.append({"n": n, "value": float(p), "sqrt_scaled": scaled})
        _emit(args, ["n", "value", "sqrt_scaled"], rows, objs)
    return _EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="mstdlab", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit one JSON object per line")
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker threads (default: MSTDLAB_THREADS or all cores); results never depend on it",
    )
    # the same flags are accepted after the subcommand; SUPPRESS keeps a
    # subparser from clobbering a value parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p_bbs = add_parser("bbs", help="bidirectional ballot sequences")
    sub_bbs = p_bbs.add_subparsers(dest="bbs_cmd", required=True, parser_class=_Parser)
    p_count = sub_bbs.add_parser("count", parents=[common], help="exact counts by length")
    p_count.add_argument("--n", required=True, help="length or inclusive range A..B")
    p_count.add_argument(
        "--engine", choices=("dp", "reflection", "both"), default="reflection",
        help="counting engine; 'both' cross-checks and exits 2 on mismatch",
    )
    p_list = sub_bbs.add_parser("list", parents=[common], help="enumerate all sequences of one length")
    p_list.add_argument("--n", type=int, required=True)

    add_parser("table1", help="counts for lengths 1..24, diffed against golden values")

    p_t2 = add_parser("table2", help="exact ratios n*B_n/2^(n-2), diffed against golden digits")
    p_t2.add_argument("--n", default="100,1000", help="comma-separated lengths")
    p_t2.add_argument("--digits", type=int, default=10, help="rendered decimal digits")

    p_mstd = add_parser("mstd", help="sumset/difference-set checks")
    sub_mstd = p_mstd.add_subparsers(dest="mstd_cmd", required=True, parser_class=_Parser)
    p_check = sub_mstd.add_parser("check", parents=[common], help="report |S+S|, |S-S| and the MSTD verdict")
    p_check.add_argument("--set", required=True, help="comma-separated nonnegative integers")

    p_con = add_parser("construct", help="the explicit MSTD family for a window")
    p_con.add_argument("--n", type=int, required=True)
    group = p_con.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true", help="dump every member set")
    group.add_argument(
        "--verify", action="store_true",
        help="brute-force verify every member is MSTD; exits 2 on any failure",
    )

    p_den = add_parser("density", help="MSTD density: exhaustive census or Monte Carlo")
    sub_den = p_den.add_subparsers(dest="density_cmd", required=True, parser_class=_Parser)
    p_cen = sub_den.add_parser("census", parents=[common], help="exact count over all subsets of a window")
    p_cen.add_argument("--n", type=int, required=True)
    p_mc = sub_den.add_parser("mc", parents=[common], help="seeded Monte Carlo estimate")
    p_mc.add_argument("--n", type=int, default=100)
    p_mc.add_argument("--samples", type=int, required=True)
    p_mc.add_argument("--seed", type=int, required=True)

    p_asy = add_parser("asymptotics", help="numeric checks of the limit statements")
    p_asy.add_argument("--which", choices=("normal", "conjecture", "pn", "footnote"), required=True)
    p_asy.add_argument("--grid", default=None, help="comma-separated n values")
    p_asy.add_argument("--t", type=float, default=0.0, help="offset for the normal check")

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "bbs":
            return _cmd_bbs_count(args) if args.bbs_cmd == "count" else _cmd_bbs_list(args)
        if args.command == "table1":
            return _cmd_table1(args)
        if args.command == "table2":
            return _cmd_table2(args)
        if args.command == "mstd":
            return _cmd_mstd_check(args)
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "density":
            return _cmd_density(args)
        if args.command == "asymptotics":
            return _cmd_asymptotics(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except (ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
