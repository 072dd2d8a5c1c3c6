"""Command-line front end.

Subcommands: count, sequence, bounds, constants, figure, verify.
Global flags (before the subcommand): --format, --cache, --force,
--float-order, --threads.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource guard tripped.

CSV output is deterministic byte for byte for fixed inputs and tool
version: counts print as exact decimal integers whatever their size,
ratios with a fixed number of decimals, '.' decimal separator, no
locale.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path

from . import __version__
from . import asympt, formulas
from .counting import (
    CapExceededError,
    CountSequence,
    METHOD_BACKTRACKING,
    METHOD_TRANSFER_DP,
    count_consecutive_dp,
    count_sequence,
)
from .patterns import (
    GeneralizedPattern,
    PatternSyntaxError,
    Permutation,
    avoids,
    parse_pattern,
)
from .series import nth_root_ratios

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

GENERAL_CAP = 11  # default brute-force ceiling; --force lifts it
FORCED_CAP = 13
DP_CAP = 300

FIGURE3_PATTERNS = ["1-2-3", "1-23", "132", "123", "1-23-4", "12-34", "3-14-2", "13-24"]
REF_LINE_132 = 0.7839769
REF_LINE_123 = 0.8269933

_BELL_PATTERNS = ["1-23", "3-21", "32-1", "12-3", "1-32", "23-1", "3-12", "21-3"]
_CATALAN_PATTERNS = ["2-13", "2-31", "31-2", "13-2"]


def _root_str(x: float) -> str:
    return f"{x:.10f}"


def _coeff_str(x) -> str:
    return f"{float(x):.12g}"


# ---------------------------------------------------------------------------
# cache file: canonical pattern text -> counts as decimal strings


def load_cache(path: str) -> dict:
    p = Path(path)
    if not p.exists():
        return {}
    return json.loads(p.read_text())


def save_cache(path: str, cache: dict) -> None:
    Path(path).write_text(json.dumps(cache, indent=1, sort_keys=True))


def cache_lookup(cache: dict, pat: GeneralizedPattern, n_max: int) -> list[int] | None:
    entry = cache.get(str(pat))
    if entry is None or entry["n_max"] < n_max:
        return None
    return [int(s) for s in entry["counts"][: n_max + 1]]


def cache_store(cache: dict, seq: CountSequence) -> None:
    old = cache.get(str(seq.pattern))
    if old is not None and old["n_max"] >= seq.n_max:
        return
    cache[str(seq.pattern)] = {
        "n_max": seq.n_max,
        "counts": [str(c) for c in seq.counts],
        "method": seq.method,
        "tool_version": __version__,
    }


# ---------------------------------------------------------------------------
# shared computation helpers


def _guarded_cap(requested: int, force: bool) -> int:
    if requested <= GENERAL_CAP or force:
        return requested
    raise CapExceededError(requested, GENERAL_CAP)


def _pattern_counts(pat: GeneralizedPattern, n_max: int, *, force: bool,
                    threads: int, cache: dict | None) -> CountSequence:
    """Counts by the cheapest valid route: cache, transfer DP, search."""
    if cache is not None:
        hit = cache_lookup(cache, pat, n_max)
        if hit is not None:
            method = METHOD_TRANSFER_DP if pat.is_consecutive else METHOD_BACKTRACKING
            return CountSequence(pat, hit, method)
    if pat.is_consecutive:
        if n_max > DP_CAP:
            raise CapExceededError(n_max, DP_CAP)
        seq = count_consecutive_dp(pat, n_max)
    else:
        _guarded_cap(n_max, force)
        seq = count_sequence(pat, n_max, force=True, threads=threads)
    if cache is not None:
        cache_store(cache, seq)
    return seq


def _bounds_rows(which: str, order: int, float_order: int, bf_cap: int, *,
                 force: bool, threads: int) -> list[list[str]]:
    order = min(order, formulas.EXACT_ORDER_CAP)
    if float_order > 200:
        raise ValueError("float order is capped at 200")
    if which == "12-34":
        report = formulas.bounds_12_34(order, bf_cap, force=force, threads=threads)
        lo_f, hi_f = formulas.bounds_12_34_float(float_order)
    elif which == "1-23-4":
        report = formulas.bounds_1_23_4(order, bf_cap, force=force, threads=threads)
        lo_f, hi_f = formulas.bounds_1_23_4_float(float_order)
    else:
        raise ValueError(f"unknown bound name {which!r}")
    lo_counts = report.lower.int_counts()
    hi_counts = report.upper.int_counts()
    lo_roots = nth_root_ratios(lo_f)
    hi_roots = nth_root_ratios(hi_f)
    alpha_roots = nth_root_ratios(report.bruteforce)
    rows = [["n", "lower_count", "alpha_n", "upper_count",
             "lower_root", "alpha_root", "upper_root"]]
    for n in range(max(order, float_order) + 1):
        row = [str(n)]
        row.append(str(lo_counts[n]) if n <= order else "")
        row.append(str(report.bruteforce[n]) if n <= report.bruteforce.n_max else "")
        row.append(str(hi_counts[n]) if n <= order else "")
        row.append(_root_str(lo_roots[n]) if 1 <= n <= float_order else "")
        row.append(
            _root_str(alpha_roots[n])
            if 1 <= n <= report.bruteforce.n_max
            else ""
        )
        row.append(_root_str(hi_roots[n]) if 1 <= n <= float_order else "")
        rows.append(row)
    return rows


def _emit_rows(rows: list[list[str]], stream) -> None:
    for row in rows:
        stream.write(",".join(row) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_count(args, cache: dict | None) -> int:
    pat = parse_pattern(args.pattern)
    if args.contains is not None:
        perm = Permutation.from_text(args.contains)
        if len(perm) != args.n:
            raise PatternSyntaxError(
                f"permutation has length {len(perm)}, expected n={args.n}"
            )
        print("avoids" if avoids(perm, pat) else "contains")
        return EXIT_OK
    seq = _pattern_counts(pat, args.n, force=args.force, threads=args.threads,
                          cache=cache)
    print(seq[args.n])
    return EXIT_OK


def cmd_sequence(args, cache: dict | None) -> int:
    pat = parse_pattern(args.pattern)
    seq = _pattern_counts(pat, args.n_max, force=args.force,
                          threads=args.threads, cache=cache)
    roots = nth_root_ratios(seq)
    if args.format == "json":
        doc = {
            "pattern": str(pat),
            "method": seq.method,
            "n_max": seq.n_max,
            "rows": [
                {
                    "n": n,
                    "count": str(seq[n]),
                    "coeff": _coeff_str(Fraction(seq[n], factorial(n))),
                    "root": _root_str(roots[n]) if n >= 1 else None,
                }
                for n in range(seq.n_max + 1)
            ],
        }
        print(json.dumps(doc, indent=1))
        return EXIT_OK
    rows = [["n", "count", "coeff", "root"]]
    for n in range(seq.n_max + 1):
        rows.append(
            [
                str(n),
                str(seq[n]),
                _coeff_str(Fraction(seq[n], factorial(n))),
                _root_str(roots[n]) if n >= 1 else "",
            ]
        )
    _emit_rows(rows, sys.stdout)
    return EXIT_OK


def cmd_bounds(args, cache: dict | None) -> int:
    bf_cap = args.bf_cap if args.bf_cap is not None else GENERAL_CAP
    if not args.force and bf_cap > GENERAL_CAP:
        raise CapExceededError(bf_cap, GENERAL_CAP)
    float_order = args.float_order or 120
    rows = _bounds_rows(args.name, args.order, float_order, bf_cap,
                        force=args.force, threads=args.threads)
    _emit_rows(rows, sys.stdout)
    return EXIT_OK


def cmd_constants(args, cache: dict | None) -> int:
    print(f"rho_123   = {asympt.rho1():.7f}   (reference 0.8269933, tol 1e-7)")
    print(f"rho_132   = {asympt.rho2(1e-9):.7f}   (reference 0.7839769, tol 1e-6)")
    print(f"gamma_132 = {asympt.gamma2(1e-9):.7f}   (reference 2.2558142, tol 1e-5)")
    print(f"gamma_123 = {asympt.gamma1_reference():.7f}   (reference value, not derived)")
    return EXIT_OK


def cmd_figure(args, cache: dict | None) -> int:
    out = Path(args.out)
    if args.which in (1, 2):
        name = "12-34" if args.which == 1 else "1-23-4"
        default_float = 120 if args.which == 1 else 90
        default_cap = FORCED_CAP if args.force else GENERAL_CAP
        bf_cap = args.bf_cap if args.bf_cap is not None else default_cap
        if not args.force and bf_cap > GENERAL_CAP:
            raise CapExceededError(bf_cap, GENERAL_CAP)
        rows = _bounds_rows(name, 60, args.float_order or default_float, bf_cap,
                            force=args.force, threads=args.threads)
    else:
        bf_cap = args.bf_cap if args.bf_cap is not None else GENERAL_CAP
        if not args.force and bf_cap > GENERAL_CAP:
            raise CapExceededError(bf_cap, GENERAL_CAP)
        dp_cap = 60
        columns = {}
        caps = {}
        for text in FIGURE3_PATTERNS:
            pat = parse_pattern(text)
            cap = dp_cap if pat.is_consecutive else bf_cap
            seq = _pattern_counts(pat, cap, force=args.force,
                                  threads=args.threads, cache=cache)
            columns[text] = nth_root_ratios(seq)
            caps[text] = cap
        n_top = max(caps.values())
        rows = [["n"] + FIGURE3_PATTERNS + ["ref_132", "ref_123"]]
        for n in range(1, n_top + 1):
            row = [str(n)]
            for text in FIGURE3_PATTERNS:
                row.append(_root_str(columns[text][n]) if n <= caps[text] else "")
            row.append(_root_str(REF_LINE_132))
            row.append(_root_str(REF_LINE_123))
            rows.append(row)
    with out.open("w") as fh:
        _emit_rows(rows, fh)
    print(f"wrote {out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


def _bell_numbers(n_max: int) -> list[int]:
    # Bell triangle
    row = [1]
    out = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return out


def _suite_identities(cap: int, force: bool, threads: int, cache: dict | None):
    bell = _bell_numbers(cap)
    catalan = formulas.catalan_counts(cap)
    for text in _BELL_PATTERNS:
        seq = _pattern_counts(parse_pattern(text), cap, force=force,
                              threads=threads, cache=cache)
        yield f"bell identity {text}", seq.counts == bell
    for text in _CATALAN_PATTERNS:
        seq = _pattern_counts(parse_pattern(text), cap, force=force,
                              threads=threads, cache=cache)
        yield f"catalan identity {text}", seq.counts == catalan


def _suite_sandwiches(cap: int, force: bool, threads: int, cache: dict | None):
    rep = formulas.bounds_12_34(40, cap, force=force, threads=threads)
    ok = rep.verdicts[0] in ("strict", "equal") and rep.all_strict(1, cap)
    yield f"12-34 sandwich strict 1..{cap}", ok
    rep = formulas.bounds_1_23_4(40, cap, force=force, threads=threads)
    ok = all(v in ("strict", "equal") for v in rep.verdicts[:2]) and rep.all_strict(2, cap)
    yield f"1-23-4 sandwich strict 2..{cap}", ok


def _suite_equalities(cap: int, force: bool, threads: int, cache: dict | None):
    pairs = [("12-345", "21-345"), ("1-23-4", "1-32-4")]
    for a, b in pairs:
        sa = _pattern_counts(parse_pattern(a), cap, force=force,
                             threads=threads, cache=cache)
        sb = _pattern_counts(parse_pattern(b), cap, force=force,
                             threads=threads, cache=cache)
        yield f"equality {a} = {b} (n <= {cap})", sa.counts == sb.counts
    family = ["12-354", "12-453", "12-534", "12-435"]
    seqs = [
        _pattern_counts(parse_pattern(t), cap, force=force, threads=threads,
                        cache=cache)
        for t in family
    ]
    same = all(s.counts == seqs[0].counts for s in seqs[1:])
    yield f"equality family {'/'.join(family)} (n <= {cap})", same


def _suite_fekete(cap: int, force: bool, threads: int, cache: dict | None):
    import itertools

    from .counting import check_submultiplicative

    reach = 12  # the DP is cheap here regardless of the brute-force cap
    for k in (3, 4):
        for letters in itertools.permutations(range(1, k + 1)):
            text = "".join(str(x) for x in letters)
            seq = count_consecutive_dp(parse_pattern(text), reach)
            pairwise = all(
                check_submultiplicative(seq, m, n)
                for m in range(reach + 1)
                for n in range(reach + 1 - m)
            )
            yield f"binomial submultiplicativity {text}", pairwise
            yield f"fekete normalized {text}", asympt.fekete_check(seq)


def _verify_cache_entries(cache: dict, cap: int, force: bool, threads: int):
    for text in sorted(cache):
        entry = cache[text]
        try:
            pat = parse_pattern(text)
            stored = [int(s) for s in entry["counts"]]
            n_check = min(entry["n_max"], cap if not pat.is_consecutive else DP_CAP)
            fresh = _pattern_counts(pat, n_check, force=force, threads=threads,
                                    cache=None)
            ok = stored[: n_check + 1] == fresh.counts
        except (PatternSyntaxError, KeyError, ValueError):
            ok = False
        yield f"cache entry {text}", ok


def cmd_verify(args, cache: dict | None) -> int:
    cap = args.cap
    suites = {
        "identities": _suite_identities,
        "sandwiches": _suite_sandwiches,
        "equalities": _suite_equalities,
        "fekete": _suite_fekete,
    }
    if args.suite == "all":
        selected = list(suites.values())
    else:
        selected = [suites[args.suite]]
    checks = []
    for fn in selected:
        checks.extend(fn(cap, args.force, args.threads, cache))
    if args.verify_cache:
        if cache is None:
            print("no cache file given for --verify-cache", file=sys.stderr)
            return EXIT_USAGE
        checks.extend(_verify_cache_entries(cache, cap, args.force, args.threads))
    failures = 0
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpavoid",
        description="Count and analyze permutations avoiding dash patterns.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=["csv", "json"], default="csv",
                        help="output format where applicable")
    parser.add_argument("--cache", metavar="PATH",
                        help="JSON cache of counting sequences")
    parser.add_argument("--force", action="store_true",
                        help="lift the brute-force resource guard")
    parser.add_argument("--float-order", type=int, default=None, metavar="M",
                        help="order for float-mode series (max 200)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for the enumeration kernel")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count avoiders, or test one permutation")
    p.add_argument("pattern")
    p.add_argument("n", type=int)
    p.add_argument("--contains", metavar="PERM",
                   help="print whether PERM contains or avoids the pattern")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("sequence", help="alpha_0..alpha_n with ratios")
    p.add_argument("pattern")
    p.add_argument("n_max", type=int)
    p.set_defaults(fn=cmd_sequence)

    p = sub.add_parser("bounds", help="coefficient sandwich as CSV")
    p.add_argument("name", choices=["12-34", "1-23-4"])
    p.add_argument("--order", type=int, default=60,
                   help="exact series order (clamped to 60)")
    p.add_argument("--bf-cap", type=int, default=None,
                   help="brute-force comparison cap")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("constants", help="reference growth constants")
    p.set_defaults(fn=cmd_constants)

    p = sub.add_parser("figure", help="emit plot data as CSV")
    p.add_argument("which", type=int, choices=[1, 2, 3])
    p.add_argument("out", help="output CSV path")
    p.add_argument("--bf-cap", type=int, default=None)
    p.set_defaults(fn=cmd_figure)

    p = sub.add_parser("verify", help="run identity and inequality suites")
    p.add_argument("suite", nargs="?", default="all",
                   choices=["identities", "sandwiches", "equalities",
                            "fekete", "all"])
    p.add_argument("--cap", type=int, default=9,
                   help="brute-force cap for the suites")
    p.add_argument("--verify-cache", action="store_true",
                   help="recompute and compare cached sequences")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache = None
    if args.cache:
        try:
            cache = load_cache(args.cache)
        except (json.JSONDecodeError, OSError) as exc:
            print(f"cannot read cache: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if not isinstance(cache, dict):
            print("cache file is not a JSON object", file=sys.stderr)
            return EXIT_USAGE
    try:
        code = args.fn(args, cache)
    except PatternSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cache is not None and args.cache:
        save_cache(args.cache, cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
