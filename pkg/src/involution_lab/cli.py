"""Command-line front end.

Subcommands: ``seq`` (sequence prefixes), ``table`` (the four valuation
columns with predictions), ``verify`` (named identity batches), ``period``
(modular period reports), ``rho`` (the 2-adic digit fit).  Output is CSV by
default or a single JSON document with ``--format json``; identical
invocations produce identical bytes.

Exit codes: 0 all good, 1 a verification failed, 2 usage error, 3 a scan
was inconclusive or an enumeration cap was exceeded.

The environment variable ``INVOLUTION_LAB_CAP`` overrides the enumeration
caps: a single integer sets the permutation cap, a pair ``ROOTS,VERTICES``
sets both.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from contextlib import contextmanager

from . import checks, conjecture, periodicity, sequences, valuations
from .algebra import val2
from .errors import InconclusiveError, ResourceLimitError, VerificationError

__all__ = ["main", "build_parser"]

_SEQ_KINDS = ("t", "tau", "beta", "g", "g_alt", "t_signed", "t_even", "t_odd")


def _usage_error(message: str) -> "SystemExit":
    print(f"involution-lab: {message}", file=sys.stderr)
    return SystemExit(2)


def _seq_value(kind: str, n: int, p: int) -> int:
    if kind == "t":
        return sequences.involution_count(n)
    if kind == "tau":
        return sequences.pth_root_count(n, p)
    if kind == "beta":
        return sequences.odd_factor(n)
    if kind == "g":
        return sequences.graph_count(n)
    if kind == "g_alt":
        return sequences.graph_count_signed(n)
    if kind == "t_signed":
        return sequences.signed_involution_count(n)
    if kind == "t_even":
        return valuations.even_involution_count(n)
    if kind == "t_odd":
        return valuations.odd_involution_count(n)
    raise ValueError(f"unknown kind {kind!r}")


def _env_caps() -> dict:
    raw = os.environ.get("INVOLUTION_LAB_CAP")
    if not raw:
        return {}
    parts = raw.split(",")
    try:
        caps = {"root_cap": int(parts[0])}
        if len(parts) > 1:
            caps["vertex_cap"] = int(parts[1])
        if len(parts) > 2:
            raise ValueError
    except ValueError:
        raise _usage_error(
            f"bad INVOLUTION_LAB_CAP value {raw!r} (want N or N,V)"
        )
    return caps


@contextmanager
def _out_stream(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _emit_rows(args, fieldnames: list[str], rows: list[dict], doc_key: str) -> None:
    with _out_stream(args.output) as fh:
        if args.format == "csv":
            writer = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        else:
            json.dump({doc_key: rows}, fh, sort_keys=True)
            fh.write("\n")


def cmd_seq(args) -> int:
    if args.start < 0 or args.to < args.start:
        raise _usage_error(f"seq: bad range {args.start}..{args.to}")
    if args.kind != "tau" and args.p is not None:
        raise _usage_error("seq: --p only applies to --kind tau")
    p = args.p if args.p is not None else 2
    rows = [
        {"n": str(n), "value": str(_seq_value(args.kind, n, p))}
        for n in range(args.start, args.to + 1)
    ]
    _emit_rows(args, ["n", "value"], rows, "rows")
    return 0


def cmd_table(args) -> int:
    if args.k_max < 0:
        raise _usage_error("table: --k-max must be nonnegative")
    rows = [valuations.table_row(n) for n in range(4 * args.k_max + 4)]
    _emit_rows(args, valuations.table_fieldnames(), rows, "rows")
    return 0


def cmd_verify(args) -> int:
    params = {
        "p": args.p,
        "n_max": args.n_max,
        "k_max": args.k_max,
        "s_max": args.s_max,
        "m_max": args.m_max,
    }
    params.update(_env_caps())
    names = sorted(checks.CHECKS) if args.check == "all" else [args.check]
    failed = False
    for name in names:
        try:
            ok, detail = checks.run_check(name, params)
        except (ResourceLimitError, InconclusiveError) as exc:
            print(f"{name}: INCONCLUSIVE: {exc}")
            return 3
        status = "PASS" if ok else "FAIL"
        print(f"{name}: {status}: {detail}")
        failed = failed or not ok
    return 1 if failed else 0


def _expected_period(args) -> tuple[int, int] | None:
    if not args.expect_paper:
        return None
    if args.t_mod is not None:
        m = args.t_mod
        if m % 2:
            return (0, m)
        k = val2(m)
        return (4 * k - 2, m >> k)
    return (0, 1 << (args.beta_mod_2s + 1))


def cmd_period(args) -> int:
    if args.t_mod is not None:
        if args.t_mod < 1:
            raise _usage_error("period: modulus must be positive")
        report = periodicity.involution_mod_period(args.t_mod, state_cap=args.window)
    else:
        s = args.beta_mod_2s
        if s < 1:
            raise _usage_error("period: s must be positive")
        if s >= 3:
            report = periodicity.odd_factor_period(s, window=args.window)
        else:
            if args.expect_paper:
                raise _usage_error(
                    f"period: no closed-form expectation is asserted for s={s}; "
                    "rerun without --expect-paper"
                )
            # No closed form sizes this window; 12 full periods of the s = 2
            # case (period 16) still cost nothing.
            window = args.window if args.window is not None else 12 << (s + 1)
            values = periodicity.odd_factor_mod_prefix(s, window)
            report = periodicity.detect_period(values, 1 << s)
    expected = _expected_period(args)
    doc = report.to_json_obj()
    matches = None
    if expected is not None:
        matches = (report.preperiod, report.period) == expected
        doc["expected"] = {"preperiod": expected[0], "period": expected[1]}
        doc["matches_expected"] = matches
    with _out_stream(args.output) as fh:
        if args.format == "json":
            json.dump(doc, fh, sort_keys=True)
            fh.write("\n")
        else:
            fields = ["modulus", "preperiod", "period", "window_checked"]
            row = {k: str(doc[k]) for k in fields}
            if expected is not None:
                fields += ["expected_preperiod", "expected_period", "matches_expected"]
                row["expected_preperiod"] = str(expected[0])
                row["expected_period"] = str(expected[1])
                row["matches_expected"] = str(matches).lower()
            writer = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
            writer.writerow(row)
    if expected is not None:
        print(f"period: {'PASS' if matches else 'FAIL'}", file=sys.stderr)
        return 0 if matches else 1
    return 0


def cmd_rho(args) -> int:
    if args.k_max < 1:
        raise _usage_error("rho: --k-max must be at least 1")
    fit = conjecture.fit_shift_digits(args.k_max, args.bits)
    with _out_stream(args.output) as fh:
        json.dump(fit.to_json_obj(), fh, sort_keys=True)
        fh.write("\n")
    return 0 if fit.consistent else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="involution-lab",
        description="Exact involution counting, valuations, and periods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", "-o", default=None, help="path, or - for stdout")

    p_seq = sub.add_parser("seq", help="emit a sequence prefix as n,value rows")
    p_seq.add_argument("--kind", choices=_SEQ_KINDS, required=True)
    p_seq.add_argument("--from", dest="start", type=int, default=0)
    p_seq.add_argument("--to", type=int, required=True)
    p_seq.add_argument("--p", type=int, default=None, help="prime for --kind tau")
    add_common(p_seq)
    p_seq.set_defaults(func=cmd_seq)

    p_table = sub.add_parser("table", help="emit the valuation table with predictions")
    p_table.add_argument("--k-max", type=int, default=10)
    add_common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run named verification batches")
    p_verify.add_argument(
        "--check",
        default="all",
        choices=sorted(checks.CHECKS) + ["all"],
    )
    p_verify.add_argument("--p", type=int, default=None)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--k-max", type=int, default=None)
    p_verify.add_argument("--s-max", type=int, default=None)
    p_verify.add_argument("--m-max", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_period = sub.add_parser("period", help="report a modular period")
    which = p_period.add_mutually_exclusive_group(required=True)
    which.add_argument("--t-mod", type=int, default=None, metavar="M",
                       help="involution counts modulo M")
    which.add_argument("--beta-mod-2s", type=int, default=None, metavar="S",
                       help="odd factors modulo 2**S")
    p_period.add_argument("--window", type=int, default=None)
    p_period.add_argument(
        "--expect-paper",
        action="store_true",
        help="check the report against the published closed-form expectation",
    )
    add_common(p_period)
    p_period.set_defaults(func=cmd_period)

    p_rho = sub.add_parser("rho", help="fit the 2-adic shift digits")
    p_rho.add_argument("--k-max", type=int, required=True)
    p_rho.add_argument("--bits", type=int, default=11)
    p_rho.add_argument("--output", "-o", default=None)
    p_rho.set_defaults(func=cmd_rho)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ResourceLimitError, InconclusiveError) as exc:
        print(f"involution-lab: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"involution-lab: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
