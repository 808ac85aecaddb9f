"""Command-line interface over the exact tables and asymptotic series.

Every subcommand assembles a ReportRecord and prints it in the requested
format.  Exit status follows the usual triple: 0 on success, 1 when a
mathematical check failed, 2 on bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import mpmath as mp

from . import asymptotics, exact
from .asymptotics import Precision
from .bijection import forward, inverse
from .exact import ConsistencyError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

OEIS_GENERATORS = {
    "a000712": lambda idx, p: exact.a000712(idx, p),
}


@dataclass
class ReportRecord:
    """One emitted result: a labeled table plus the invocation parameters."""

    kind: str
    parameters: dict = field(default_factory=dict)
    columns: list = field(default_factory=list)
    rows: list = field(default_factory=list)


def _cell_json(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)  # decimal strings keep big integers lossless
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, mp.mpf):
        return float(v)
    return v


def _cell_str(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, mp.mpf):
        return mp.nstr(v, 17)
    return str(v)


def emit(record: ReportRecord, fmt: str, out) -> None:
    if fmt == "json":
        doc = {
            "kind": record.kind,
            "parameters": {k: _cell_json(v) for k, v in record.parameters.items()},
            "columns": record.columns,
            "rows": [[_cell_json(v) for v in row] for row in record.rows],
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(record.columns)
        for row in record.rows:
            writer.writerow([_cell_str(v) for v in row])
    else:
        params = ", ".join(f"{k}={_cell_str(v)}" for k, v in record.parameters.items())
        out.write(f"{record.kind} ({params})\n" if params else f"{record.kind}\n")
        cells = [record.columns] + [[_cell_str(v) for v in row] for row in record.rows]
        widths = [max(len(r[c]) for r in cells) for c in range(len(record.columns))]
        for r in cells:
            out.write("  ".join(s.ljust(w) for s, w in zip(r, widths)).rstrip() + "\n")


# ---------------------------------------------------------------------------
# table caching
# ---------------------------------------------------------------------------


def _p_table_cached(cache_dir: Optional[Path], max_n: int) -> list:
    if cache_dir is None:
        return exact.partition_counts(max_n)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"p-table-{max_n}.txt"
    if path.exists():
        with path.open() as fh:
            exact.preload_partition_counts(exact.load_p_table(fh))
        return exact.partition_counts(max_n)
    values = exact.partition_counts(max_n)
    with path.open("w") as fh:
        exact.save_p_table(fh, values)
    return values


def _divisors_cached(
    cache_dir: Optional[Path], max_k: int, m: int, i: int
) -> exact.DivisorSumTables:
    if cache_dir is None:
        return exact.divisor_tables(max_k, m, i)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"divisors-k{max_k}-m{m}-i{i}.txt"
    if path.exists():
        with path.open() as fh:
            tables = exact.load_divisor_tables(fh)
        if (tables.max_k, tables.m, tables.i) != (max_k, m, i):
            raise ValueError(f"{path}: header does not match requested tables")
        exact.adopt_divisor_tables(tables)
        return tables
    tables = exact.divisor_tables(max_k, m, i)
    with path.open("w") as fh:
        exact.save_divisor_tables(fh, tables)
    return tables


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_f_table(args) -> tuple[ReportRecord, int]:
    n = args.n
    f = exact.f_table(n)
    hi = 0 if n == 0 else n // 2 + 1
    p = exact.partition_counts(max(hi, 1))
    rows = []
    for j in range(hi + 1):
        fj = f[j]
        aj = exact.a000712(j, p)
        rows.append((j, fj, aj, fj == aj))
    record = ReportRecord(
        "f-table", {"n": n}, ["j", "f", "pair_count", "match"], rows
    )
    return record, EXIT_OK


def cmd_theorem1(args) -> tuple[ReportRecord, int]:
    rows = []
    all_ok = True
    for n in range(3, args.n_max + 1):
        found = exact.theorem1_check(n)
        expected = n // 3 + 1
        ok = found == expected
        all_ok = all_ok and ok
        rows.append((n, found, expected, ok))
    record = ReportRecord(
        "theorem1",
        {"n_max": args.n_max, "verdict": "PASS" if all_ok else "FAIL"},
        ["n", "first_mismatch", "expected", "ok"],
        rows,
    )
    return record, EXIT_OK if all_ok else EXIT_CHECK_FAILED


def cmd_expectation(args) -> tuple[ReportRecord, int]:
    m, i = args.m, args.i
    n_list = sorted(set(args.n))
    prec = args.precision_obj
    p = _p_table_cached(args.cache_dir, n_list[-1])
    tables = _divisors_cached(args.cache_dir, n_list[-1], m, i)
    rows = []
    for n in n_list:
        total = exact.total_subsum(n, m, i, p=p, tables=tables)
        mean = Fraction(total, p[n])
        with mp.workdps(prec.dps):
            approx = mp.mpf(mean.numerator) / mean.denominator
            predicted = asymptotics.predict_expected_subsum(n, m, i, prec)
            residual = (
                approx
                - mp.mpf(n) / m
                - asymptotics.b_coeff(m, i, prec) * mp.sqrt(n) * mp.log(n)
                - asymptotics.c_coeff(m, i, prec) * mp.sqrt(n)
            )
        rows.append((n, mean, approx, predicted, residual))
    record = ReportRecord(
        "expectation",
        {"m": m, "i": i, "precision": prec.name},
        ["n", "mean_exact", "mean", "predicted", "residual"],
        rows,
    )
    return record, EXIT_OK


def _ladder(n_max: int) -> list[int]:
    out = []
    n = n_max
    while n >= 100:
        out.append(n)
        n //= 4
    return sorted(out)


def cmd_convergence(args) -> tuple[ReportRecord, int]:
    m, i = args.m, args.i
    prec = args.precision_obj
    ladder = _ladder(args.n_max)
    if len(ladder) < 2:
        raise UsageError("n-max must be at least 400 to form a ladder")
    p = _p_table_cached(args.cache_dir, ladder[-1])
    tables = _divisors_cached(args.cache_dir, ladder[-1], m, i)

    def exact_total(n: int) -> int:
        return exact.total_subsum(n, m, i, p=p, tables=tables)

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            totals = list(pool.map(exact_total, ladder))
    else:
        totals = [exact_total(n) for n in ladder]

    rows = []
    scaled = []
    with mp.workdps(prec.dps):
        b = asymptotics.b_coeff(m, i, prec)
        c = asymptotics.c_coeff(m, i, prec)
        for n, total in zip(ladder, totals):
            mean = mp.mpf(total) / p[n]
            rn = mp.sqrt(n)
            r = mean - mp.mpf(n) / m - b * rn * mp.log(n) - c * rn
            scaled.append(abs(r) / rn)
            rows.append((n, mean, r, abs(r) / rn, abs(r) / mp.log(n)))
    improving = all(x > y for x, y in zip(scaled, scaled[1:]))
    record = ReportRecord(
        "convergence",
        {
            "m": m,
            "i": i,
            "n_max": args.n_max,
            "precision": prec.name,
            "improving": improving,
        },
        ["n", "mean", "residual", "abs_residual_over_sqrt_n", "abs_residual_over_log_n"],
        rows,
    )
    return record, EXIT_OK if improving else EXIT_CHECK_FAILED


def cmd_constants(args) -> tuple[ReportRecord, int]:
    m = args.m
    prec = args.precision_obj
    rows = []
    with mp.workdps(prec.dps):
        worst = mp.mpf(0)
        total = mp.mpf(0)
        for h in range(1, m + 1):
            values = (
                asymptotics.gamma_mh_roots(m, h, prec),
                asymptotics.gamma_mh_gauss(m, h, prec),
                asymptotics.gamma_mh_digamma(m, h, prec),
            )
            dev = max(abs(a - b) for a in values for b in values)
            worst = max(worst, dev)
            total += values[0]
            rows.append((f"gamma[{h}] roots-of-unity", values[0]))
            rows.append((f"gamma[{h}] gauss", values[1]))
            rows.append((f"gamma[{h}] digamma", values[2]))
        rows.append(("gamma_sum", total))
        rows.append(("max_cross_deviation", worst))
        for i in range(1, m + 1):
            rows.append((f"b[{i}]", asymptotics.b_coeff(m, i, prec)))
            rows.append((f"c[{i}]", asymptotics.c_coeff(m, i, prec)))
        ok = worst <= prec.cross_tol and abs(total) <= prec.cross_tol
    record = ReportRecord(
        "constants",
        {"m": m, "precision": prec.name, "verdict": "PASS" if ok else "FAIL"},
        ["label", "value"],
        rows,
    )
    return record, EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_lambert(args) -> tuple[ReportRecord, int]:
    prec = args.precision_obj
    exact_value = asymptotics.lambert_tau_exact(args.alpha, args.m, args.h, prec)
    series = asymptotics.lambert_tau_asymptotic(
        args.alpha, args.m, args.h, max_terms=args.max_terms, precision=prec
    )
    with mp.workdps(prec.dps):
        diff = abs(exact_value - series.value)
        within = bool(diff <= 2 * series.last_term_magnitude)
    rows = [
        ("exact", exact_value),
        ("asymptotic", series.value),
        ("abs_difference", diff),
        ("terms_used", series.terms_used),
        ("last_term_magnitude", series.last_term_magnitude),
        ("within_2x_last_term", within),
    ]
    record = ReportRecord(
        "lambert",
        {
            "alpha": args.alpha,
            "m": args.m,
            "h": args.h,
            "max_terms": args.max_terms,
            "precision": prec.name,
        },
        ["label", "value"],
        rows,
    )
    return record, EXIT_OK if within else EXIT_CHECK_FAILED


def _parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"cannot parse partition from {text!r}") from None
    return exact.check_partition(parts)


def cmd_bijection(args) -> tuple[ReportRecord, int]:
    if args.partition is not None:
        parts = _parse_partition(args.partition)
        image = forward(parts)
        back = inverse(image.alpha, image.beta, image.n)
        rows = [
            ("direction", "forward"),
            ("partition", _format_partition(parts)),
            ("alpha", _format_partition(image.alpha)),
            ("beta", _format_partition(image.beta)),
            ("n", image.n),
            ("j", image.j),
            ("roundtrip_ok", back == parts),
        ]
        ok = back == parts
        params = {"partition": args.partition}
    else:
        alpha = _parse_partition(args.alpha)
        beta = _parse_partition(args.beta)
        parts = inverse(alpha, beta, args.n)
        image = forward(parts)
        rows = [
            ("direction", "inverse"),
            ("alpha", _format_partition(alpha)),
            ("beta", _format_partition(beta)),
            ("n", args.n),
            ("partition", _format_partition(parts)),
            ("j", sum(alpha) + sum(beta)),
            ("roundtrip_ok", (image.alpha, image.beta) == (alpha, beta)),
        ]
        ok = (image.alpha, image.beta) == (alpha, beta)
        params = {"alpha": args.alpha, "beta": args.beta, "n": args.n}
    record = ReportRecord("bijection", params, ["label", "value"], rows)
    return record, EXIT_OK if ok else EXIT_CHECK_FAILED


def read_bfile(path: Path) -> list[tuple[int, int]]:
    """Parse an OEIS b-file: 'index value' per line, # comments allowed."""
    entries = []
    with path.open() as fh:
        for lineno, raw in enumerate(fh, 1):
            s = raw.strip()
            if not s or s.startswith("#"):
                continue
            fields = s.split()
            if len(fields) != 2:
                raise ValueError(f"{path}: line {lineno}: expected 'index value'")
            try:
                entries.append((int(fields[0]), int(fields[1])))
            except ValueError:
                raise ValueError(
                    f"{path}: line {lineno}: non-integer field in {s!r}"
                ) from None
    if not entries:
        raise ValueError(f"{path}: no entries found")
    start = entries[0][0]
    for offset, (idx, _) in enumerate(entries):
        if idx != start + offset:
            raise ValueError(f"{path}: indices not consecutive at index {idx}")
    if start < 0:
        raise ValueError(f"{path}: negative start index {start} not supported")
    return entries


def cmd_oeis_check(args) -> tuple[ReportRecord, int]:
    entries = read_bfile(args.bfile)
    generator = OEIS_GENERATORS[args.generator]
    count = args.count if args.count is not None else len(entries)
    params = {
        "bfile": str(args.bfile),
        "generator": args.generator,
        "count": count,
    }
    if count > len(entries):
        params["warning"] = (
            f"requested {count} entries but the file holds {len(entries)}"
        )
        count = len(entries)
    checked = entries[:count]
    p = exact.partition_counts(checked[-1][0])
    first_bad = None
    for idx, value in checked:
        if generator(idx, p) != value:
            first_bad = idx
            break
    rows = [
        ("entries_checked", len(checked)),
        ("first_mismatch_index", "none" if first_bad is None else first_bad),
        ("verdict", "PASS" if first_bad is None else "FAIL"),
    ]
    record = ReportRecord("oeis-check", params, ["label", "value"], rows)
    return record, EXIT_OK if first_bad is None else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


class UsageError(Exception):
    """Bad arguments or unusable input files; maps to exit status 2."""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "text"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--precision", choices=("double", "extended"), default="extended",
        help="working precision for floating-point results",
    )
    common.add_argument(
        "--cache-dir", type=Path, default=None,
        help="directory for persisted p-tables and divisor tables",
    )
    common.add_argument(
        "--threads", type=int, default=1,
        help="worker threads for ladder evaluations",
    )

    parser = argparse.ArgumentParser(
        prog="partsums",
        description="Exact and asymptotic spaced subsums of integer partitions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("f-table", parents=[common],
                        help="even-index subsum counts next to pair counts")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(handler=cmd_f_table)

    sp = sub.add_parser("theorem1", parents=[common],
                        help="locate the first f/pair-count mismatch per n")
    sp.add_argument("--n-max", type=int, required=True)
    sp.set_defaults(handler=cmd_theorem1)

    sp = sub.add_parser("expectation", parents=[common],
                        help="exact mean subsum with its asymptotic prediction")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--n", type=int, action="append", required=True,
                    help="target weight; may be repeated")
    sp.set_defaults(handler=cmd_expectation)

    sp = sub.add_parser("convergence", parents=[common],
                        help="residual trend along a geometric ladder")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.set_defaults(handler=cmd_convergence)

    sp = sub.add_parser("constants", parents=[common],
                        help="gamma constants by three routes, with b and c")
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(handler=cmd_constants)

    sp = sub.add_parser("lambert", parents=[common],
                        help="exact vs asymptotic residue-class Lambert series")
    sp.add_argument("--alpha", type=str, required=True,
                    help="positive rate parameter, parsed at working precision")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--max-terms", type=int, default=8)
    sp.set_defaults(handler=cmd_lambert)

    sp = sub.add_parser("bijection", parents=[common],
                        help="apply the subsum bijection in either direction")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--partition", type=str,
                       help="comma-separated parts; empty string for ()")
    group.add_argument("--alpha", type=str)
    sp.add_argument("--beta", type=str)
    sp.add_argument("--n", type=int)
    sp.set_defaults(handler=cmd_bijection)

    sp = sub.add_parser("oeis-check", parents=[common],
                        help="compare a generated sequence against a b-file")
    sp.add_argument("--bfile", type=Path, required=True)
    sp.add_argument("--generator", choices=sorted(OEIS_GENERATORS),
                    default="a000712")
    sp.add_argument("--count", type=int, default=None)
    sp.set_defaults(handler=cmd_oeis_check)

    return parser


def _format_partition(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in parts) + ")"


def _validate(args, parser: argparse.ArgumentParser) -> None:
    if args.command == "bijection" and args.partition is None:
        if args.alpha is None or args.beta is None or args.n is None:
            parser.error("inverse direction needs --alpha, --beta and --n")
    if args.command == "theorem1" and args.n_max < 3:
        parser.error("--n-max must be at least 3")
    if args.command == "f-table" and args.n < 0:
        parser.error("--n must be >= 0")
    if args.threads < 1:
        parser.error("--threads must be >= 1")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.precision_obj = asymptotics.precision_named(args.precision)
    try:
        record, status = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    emit(record, args.format, sys.stdout)
    return status


def entry() -> None:
    raise SystemExit(main())
