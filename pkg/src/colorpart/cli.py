"""Command-line front end.

    colorpart count --preset mod7 --side S --n 15
    colorpart verify --preset mod11 --nmax 150 --format json
    colorpart biject --preset mod5 "3@3+"
    colorpart biject --preset mod5 --inverse --label 4 ""
    colorpart conjecture23 --nmax 50

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .colored import (
    PRESETS,
    count_D,
    count_D_qseries,
    format_colored,
    get_preset,
    identity_check,
    parse_colored,
    parse_system,
)
from .gm_lift import end_to_end, end_to_end_inverse
from .master import tuple_identity_check

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(rows, columns, fmt, summary, out):
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
        out.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row[k] for k in columns})
    else:
        widths = [max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns]
        out.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)) + "\n")
        for row in rows:
            out.write("  ".join(str(row[c]).rjust(w) for c, w in zip(columns, widths)) + "\n")
        for key in sorted(summary):
            out.write(f"{key}: {summary[key]}\n")


def _range(args):
    if args.n is not None:
        return args.n, args.n
    if args.nmax is None:
        raise UsageError("give --n or --nmax")
    return (args.nmin if args.nmin is not None else 0), args.nmax


def cmd_count(args, out) -> int:
    if (args.preset is None) == (args.system is None):
        raise UsageError("give exactly one of --preset or --system")
    try:
        system = parse_system(args.system) if args.system else getattr(get_preset(args.preset), args.side)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    lo, hi = _range(args)
    if lo < 0:
        raise UsageError("N must be nonnegative")
    series = count_D_qseries(system, hi)
    rows = []
    for N in range(lo, hi + 1):
        enum = count_D(system, N)
        rows.append({"N": N, "enumeration": enum, "qseries": series[N], "agree": enum == series[N]})
    ok = all(r["agree"] for r in rows)
    summary = {"system": system.spec(), "agree": ok}
    _emit(rows, ["N", "enumeration", "qseries", "agree"], args.format, summary, out)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    preset = _get_preset(args.preset)
    if args.nmax < preset.N0:
        raise UsageError(f"--nmax must be at least N0={preset.N0}")
    start = time.perf_counter()
    report = identity_check(preset, args.nmax)
    rows = [
        {
            "N": r.N,
            "D_S": r.D_S,
            "D_T": r.D_T,
            "factor": r.factor,
            "pass": r.passed and r.oracle_agrees,
        }
        for r in report.records
    ]
    summary = {"preset": preset.name, "N_min": report.N_min, "N_max": report.N_max, "pass": report.passed}
    if not args.no_timing:
        summary["seconds"] = round(time.perf_counter() - start, 3)
    _emit(rows, ["N", "D_S", "D_T", "factor", "pass"], args.format, summary, out)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _get_preset(name):
    try:
        return get_preset(name)
    except KeyError as exc:
        raise UsageError(str(exc)) from None


def _jsonable(obj):
    if isinstance(obj, tuple):
        if hasattr(obj, "_asdict"):
            return {k: _jsonable(v) for k, v in obj._asdict().items()}
        return [_jsonable(x) for x in obj]
    return obj


def cmd_biject(args, out) -> int:
    preset = _get_preset(args.preset)
    trace = []
    try:
        if args.inverse:
            if args.label is None:
                raise UsageError("--inverse needs --label")
            tau = parse_colored(args.partition, preset.T)
            pi = end_to_end_inverse(preset, tau, args.label, trace)
            result = {"preset": preset.name, "input": format_colored(tau), "label": args.label,
                      "image": format_colored(pi), "image_weight": sum(p[0] for p in pi)}
        else:
            pi = parse_colored(args.partition, preset.S)
            tau, label = end_to_end(preset, pi, trace)
            result = {"preset": preset.name, "input": format_colored(pi), "image": format_colored(tau),
                      "image_weight": sum(p[0] for p in tau), "label": label}
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result["trace"] = [{"step": step, "value": _jsonable(value)} for step, value in trace]
    if args.format == "json":
        out.write(json.dumps(result, sort_keys=True) + "\n")
    else:
        out.write(f"image: {result['image'] or '()'}\n")
        out.write(f"label: {result['label']}\n")
        out.write("trace: " + json.dumps(result["trace"]) + "\n")
    return EXIT_PASS


def cmd_conjecture23(args, out) -> int:
    preset = PRESETS["mod23"]
    if args.nmax < preset.N0:
        raise UsageError(f"--nmax must be at least {preset.N0}")
    start = time.perf_counter()
    tuples = tuple_identity_check(preset, args.nmax)
    counts = identity_check(preset, args.nmax)
    rows = []
    consistent = True
    for t, c in zip(tuples, counts.records):
        same = t.passed == (c.passed and c.oracle_agrees)
        consistent &= same
        rows.append({"N": t.N, "lhs_tuples": t.lhs, "rhs_tuples": t.rhs, "tuples_pass": t.passed,
                     "D_S": c.D_S, "D_T": c.D_T, "counts_pass": c.passed and c.oracle_agrees,
                     "consistent": same})
    ok = consistent and all(r["tuples_pass"] for r in rows)
    summary = {"preset": "mod23", "N_min": preset.N0, "N_max": args.nmax, "pass": ok,
               "consistent": consistent}
    if not args.no_timing:
        summary["seconds"] = round(time.perf_counter() - start, 3)
    _emit(rows, ["N", "lhs_tuples", "rhs_tuples", "tuples_pass", "D_S", "D_T", "counts_pass", "consistent"],
          args.format, summary, out)
    if not consistent:
        sys.stderr.write("condition (i) and condition (ii) disagree; the equivalence is violated\n")
    return EXIT_PASS if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="colorpart", description="Colored partition identities, counted and bijected.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock fields")
    common.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("count", parents=[common], help="D_S(N) by enumeration and by q-series")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--side", choices=("S", "T"), default="S")
    p.add_argument("--system", help='custom system, e.g. "t=1;C=2;A=1"')
    p.add_argument("--n", type=int)
    p.add_argument("--nmin", type=int)
    p.add_argument("--nmax", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="check D_S(N) = 2^p D_T(N - m)")
    p.add_argument("--preset", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("biject", parents=[common], help="apply the explicit bijection")
    p.add_argument("--preset", required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--label", type=int)
    p.add_argument("partition", help='colored parts, e.g. "7@4+,7@4-,1@1+"')
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("conjecture23", parents=[common], help="numeric evidence for the mod-23 case")
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_conjecture23)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"colorpart: {exc}\n")
        return EXIT_USAGE
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except UsageError as exc:
        sys.stderr.write(f"colorpart: {exc}\n")
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
