"""Command-line front end: ``paradiag {table,verify,enumerate,bfile}``.

Exit status is 0 on success, 1 when a verification or oracle cross-check
fails (the negative-control identity excluded), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import Optional, Sequence

from . import closed_forms as cf
from . import identities, polygon

SEGMENTS = {"01": (0, 1), "02": (0, 2)}

BFILE_SEQUENCES = {
    # b-file index i >= 1 -> term
    "f02_even_from_4": lambda i: cf.f02_even(i + 1),
    "f01_odd_from_5": lambda i: cf.f01_odd(i + 1),
}


class UsageError(Exception):
    pass


def max_oracle_n() -> int:
    raw = os.environ.get("PARADIAG_MAX_N", str(polygon.MAX_N))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"PARADIAG_MAX_N must be an integer, got {raw!r}") from None


def _classes(n: int, spec: str) -> list[str]:
    if spec != "auto":
        return [spec]
    return ["01"] if n % 2 else ["01", "02"]


def _render_counts(counts: dict[int, int]) -> str:
    return " ".join(f"k{k}={v}" for k, v in sorted(counts.items()))


def _render_rows(rows: list[tuple[int, str, dict[int, int]]], fmt: str, labelled: bool) -> str:
    if fmt == "text":
        lines = []
        for n, cls, counts in rows:
            head = f"{n} [{cls}]" if labelled else f"{n}"
            lines.append(f"{head}: {_render_counts(counts)}")
        return "".join(line + "\n" for line in lines)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "class", "k", "count"])
        for n, cls, counts in rows:
            for k, v in sorted(counts.items()):
                w.writerow([n, cls, k, v])
        return buf.getvalue()
    if fmt == "json":
        return "".join(
            json.dumps({"n": n, "class": cls, "counts": {str(k): str(v) for k, v in sorted(counts.items())}})
            + "\n"
            for n, cls, counts in rows
        )
    if fmt == "bfile":
        if len(rows) != 1:
            raise UsageError("bfile output needs a single n and a single class")
        return bfile_text(sorted(rows[0][2].items()))
    raise UsageError(f"unknown format {fmt!r}")


def bfile_text(pairs: Sequence[tuple[int, int]]) -> str:
    return "".join(f"{i} {v}\n" for i, v in pairs)


def cmd_table(args: argparse.Namespace) -> int:
    if not 3 <= args.n_lo <= args.n_hi:
        raise UsageError(f"need 3 <= n_lo <= n_hi, got {args.n_lo}..{args.n_hi}")
    if args.oracle and args.n_hi > max_oracle_n():
        raise UsageError(f"oracle limited to n <= {max_oracle_n()} (PARADIAG_MAX_N)")
    rows = []
    mismatches = []
    for n in range(args.n_lo, args.n_hi + 1):
        for cls in _classes(n, args.cls):
            x, y = SEGMENTS[cls]
            counts = cf.histogram(n, x, y)
            if args.oracle:
                brute = polygon.histogram(n, x, y, jobs=args.jobs).counts
                if brute != counts:
                    mismatches.append((n, cls, counts, brute))
                counts = brute
            rows.append((n, cls, counts))
    sys.stdout.write(_render_rows(rows, args.format, labelled=args.cls == "auto"))
    for n, cls, formula, brute in mismatches:
        print(f"mismatch at n={n} class {cls}: formula {formula} oracle {brute}", file=sys.stderr)
    return 1 if mismatches else 0


def _report_line(r: identities.VerificationReport, control: bool) -> str:
    status = "PASS" if r.passed else "FAIL"
    line = f"{status} {r.identity} n={r.n_lo}..{r.n_hi} ({len(r.rows)} checks)"
    if r.failures:
        f = r.failures[0]
        where = f"n={f.n}" if f.k is None else f"n={f.n} k={f.k}"
        line += f" first counterexample {where}: lhs={f.lhs} rhs={f.rhs}"
    if control:
        line += " [negative control]"
    return line


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n_hi < 2:
        raise UsageError(f"n_hi must be at least 2, got {args.n_hi}")
    reports = identities.verify_all(args.n_hi)
    controls = set(identities.NEGATIVE_CONTROLS)
    if args.errata:
        errata = identities.errata_checks()
        controls |= {r.identity for r in errata if "corrected" not in r.identity}
        reports += errata
    ok = all(r.passed for r in reports if r.identity not in controls)

    fmt = args.format
    if fmt == "text":
        for r in reports:
            print(_report_line(r, r.identity in controls))
    elif fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["identity", "n_lo", "n_hi", "checks", "passed", "negative_control",
                    "first_fail_n", "first_fail_lhs", "first_fail_rhs"])
        for r in reports:
            f = r.failures[0] if r.failures else None
            w.writerow([r.identity, r.n_lo, r.n_hi, len(r.rows), r.passed, r.identity in controls,
                        f.n if f else "", f.lhs if f else "", f.rhs if f else ""])
    elif fmt == "json":
        for r in reports:
            print(json.dumps({
                "identity": r.identity,
                "range": [r.n_lo, r.n_hi],
                "passed": r.passed,
                "negative_control": r.identity in controls,
                "failures": [{"n": f.n, "k": f.k, "lhs": str(f.lhs), "rhs": str(f.rhs)}
                             for f in r.failures],
            }))
    else:
        raise UsageError("verify supports text, csv and json output")
    return 0 if ok else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    if n < 3:
        raise UsageError(f"polygon size must be at least 3, got {n}")
    if n > max_oracle_n():
        raise UsageError(f"oracle limited to n <= {max_oracle_n()} (PARADIAG_MAX_N)")
    if args.x % n == args.y % n:
        raise UsageError("x and y must be distinct vertices")
    start = time.perf_counter()
    hist = polygon.histogram(n, args.x, args.y, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    label = f"{args.x}{args.y}"
    if args.format == "text":
        print(f"{n} [{label}]: {_render_counts(hist.counts)}")
        print(f"total {hist.total}")
    else:
        sys.stdout.write(_render_rows([(n, label, hist.counts)], args.format, labelled=True))
    print(f"time {elapsed:.3f}s", file=sys.stderr)
    return 0


def cmd_bfile(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise UsageError("count must be nonnegative")
    term = BFILE_SEQUENCES[args.sequence]
    sys.stdout.write(bfile_text([(i, term(i)) for i in range(1, args.count + 1)]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paradiag",
        description="Count triangulations of a regular polygon by diagonals parallel to a fixed edge.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ["text", "csv", "json", "bfile"]

    p = sub.add_parser("table", help="k-histograms from the closed forms")
    p.add_argument("n_lo", type=int)
    p.add_argument("n_hi", type=int)
    p.add_argument("--class", dest="cls", choices=["01", "02", "auto"], default="auto",
                   help="reference segment; auto lists every distinct class")
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--oracle", action="store_true",
                   help="recount by brute force and fail on any disagreement")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the oracle (0 = all cores)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check every registered identity up to n_hi")
    p.add_argument("n_hi", type=int)
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--errata", action="store_true",
                   help="also compare printed and corrected k >= 1 formulas with brute force")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="brute-force histogram for the segment xy")
    p.add_argument("n", type=int)
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "bfile",
        help="b-file dump of a sequence",
        description=(
            "Write 'index value' lines, index starting at 1. f02_even_from_4 emits "
            "f02(2i+2) (polygons 4, 6, 8, ...); f01_odd_from_5 emits f01(2i+3) "
            "(polygons 5, 7, 9, ...). Offsets are not aligned with any external database."
        ),
    )
    p.add_argument("sequence", choices=sorted(BFILE_SEQUENCES))
    p.add_argument("count", type=int)
    p.set_defaults(func=cmd_bfile)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
