"""Command-line front end.

    quotientrule partitions 4 --format json
    quotientrule reciprocal --v 2,1
    quotientrule quotient --u 0,1,0 --v 1,1,1
    quotientrule identities exp --max-n 25
    quotientrule logcoeffs 3 --format csv
    quotientrule verify

Exit codes: 0 success and every check verified, 1 a verification mismatch,
2 a usage error.  Values that start with a minus sign must be attached with
``=``, e.g. ``--v=-1/2,3``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from quotientrule import acceptance, identities, special
from quotientrule.exactnum import format_rat, parse_rat_list
from quotientrule.jets import (
    DerivativeJet,
    SingularPointError,
    leibniz_product,
    oracle_quotient_jet,
    oracle_reciprocal_jet,
    quotient_jet,
    reciprocal_jet,
)
from quotientrule.partitions import (
    enumerate_partitions,
    multiplicity_multinomial,
    pi_of,
    r_of,
    weights,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

WEIGHT_NAMES = ("c", "c_bar", "p", "p_bar", "q", "q_bar")


class UsageError(Exception):
    pass


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _jet_arg(text: str) -> DerivativeJet:
    try:
        return DerivativeJet(parse_rat_list(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _csv_text(header: Sequence[str], rows: list[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands ------------------------------------------------------------


def cmd_partitions(args: argparse.Namespace) -> tuple[int, str]:
    records = []
    for p in enumerate_partitions(args.n):
        records.append((p, r_of(p), pi_of(p), multiplicity_multinomial(p), weights(p)))
    if args.format == "json":
        doc = {
            "n": args.n,
            "count": len(records),
            "partitions": [
                {"partition": p.to_json(), "r": r, "pi": pi, "multinomial": mn, "weights": w.to_json()}
                for p, r, pi, mn, w in records
            ],
        }
        return EXIT_OK, _json_text(doc)
    if args.format == "csv":
        rows = [
            [";".join(str(y) for y in p.mult), r, pi, mn] + [format_rat(getattr(w, k)) for k in WEIGHT_NAMES]
            for p, r, pi, mn, w in records
        ]
        return EXIT_OK, _csv_text(["mult", "r", "pi", "multinomial", *WEIGHT_NAMES], rows)
    lines = [f"partitions of {args.n}: {len(records)}"]
    for p, r, pi, mn, w in records:
        ws = " ".join(f"{k}={format_rat(getattr(w, k))}" for k in WEIGHT_NAMES)
        lines.append(f"  {str(p):<16} mult={list(p.mult)} r={r} pi={pi} multinomial={mn} {ws}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _emit_jet_result(args, label: str, inputs: dict[str, DerivativeJet], result: DerivativeJet,
                     verified: bool) -> tuple[int, str]:
    code = EXIT_OK if verified else EXIT_MISMATCH
    if args.format == "json":
        doc = {
            "rule": label,
            "inputs": {k: j.to_json() for k, j in inputs.items()},
            "result": result.to_json(),
            "verified": verified,
        }
        return code, _json_text(doc)
    if args.format == "csv":
        rows = [[k, format_rat(x), str(verified).lower()] for k, x in enumerate(result)]
        return code, _csv_text(["order", "value", "verified"], rows)
    values = ", ".join(format_rat(x) for x in result)
    return code, f"{label}: [{values}]\nverified: {str(verified).lower()}\n"


def cmd_reciprocal(args: argparse.Namespace) -> tuple[int, str]:
    v = args.v
    result = reciprocal_jet(v)
    verified = result == oracle_reciprocal_jet(v)
    return _emit_jet_result(args, "reciprocal", {"v": v}, result, verified)


def cmd_quotient(args: argparse.Namespace) -> tuple[int, str]:
    u, v = args.u, args.v
    if u.order != v.order:
        raise UsageError(f"--u and --v must have the same length ({len(u)} vs {len(v)})")
    result = quotient_jet(u, v)
    verified = result == oracle_quotient_jet(u, v) == leibniz_product(u, reciprocal_jet(v))
    return _emit_jet_result(args, "quotient", {"u": u, "v": v}, result, verified)


def cmd_identities(args: argparse.Namespace) -> tuple[int, str]:
    names = identities.IDENTITY_NAMES if args.which == "all" else (args.which,)
    reports = [r for name in names for r in identities.sweep(name, args.max_n, args.max_m)]
    verified = all(r.holds for r in reports)
    code = EXIT_OK if verified else EXIT_MISMATCH
    if args.format == "json":
        return code, _json_text({"reports": [r.to_json() for r in reports], "verified": verified})
    if args.format == "csv":
        rows = [
            [r.name, ";".join(f"{k}={v}" for k, v in r.params.items()),
             format_rat(r.lhs), format_rat(r.rhs), str(r.holds).lower()]
            for r in reports
        ]
        return code, _csv_text(["name", "params", "lhs", "rhs", "holds"], rows)
    lines = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        mark = "ok" if r.holds else "FAIL"
        lines.append(f"{r.name:<14} {params:<24} lhs={format_rat(r.lhs):<14} rhs={format_rat(r.rhs):<14} {mark}")
    lines.append(f"{len(reports)} instances, all hold: {str(verified).lower()}")
    return code, "\n".join(lines) + "\n"


def cmd_logcoeffs(args: argparse.Namespace) -> tuple[int, str]:
    n = args.n
    feng = special.fengqi_log_coefficients(n)
    part = special.partition_log_coefficients(n)
    match = feng == part
    code = EXIT_OK if match else EXIT_MISMATCH
    terms = special.term_counts(n)
    if args.format == "json":
        doc = {
            "n": n,
            "partition": part.to_json(),
            "fengqi": feng.to_json(),
            "match": match,
            "terms": terms,
        }
        return code, _json_text(doc)
    if args.format == "csv":
        rows = [[i, format_rat(part.a[i]), format_rat(feng.a[i]), str(part.a[i] == feng.a[i]).lower()]
                for i in sorted(part.a)]
        return code, _csv_text(["i", "partition", "fengqi", "match"], rows)
    lines = [f"(1/ln x)^({n}) = (-1)^{n}/x^{n} * sum_i a[{n},i] / (ln x)^i"]
    for i in sorted(part.a):
        lines.append(f"  a[{n},{i}] = {format_rat(part.a[i]):<12} (harmonic sums: {format_rat(feng.a[i])})")
    lines.append(f"terms: partition={terms['partition']} fengqi={terms['fengqi']}")
    lines.append(f"match: {str(match).lower()}")
    return code, "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    results = acceptance.run_all(seed=args.seed)
    verified = all(r.passed for r in results)
    code = EXIT_OK if verified else EXIT_MISMATCH
    if args.format == "json":
        docs = [r.to_json(timings=args.timings) for r in results]
        return code, _json_text({"criteria": docs, "verified": verified})
    if args.format == "csv":
        header = ["criterion", "name", "passed", "detail"] + (["seconds"] if args.timings else [])
        rows = [[r.number, r.name, str(r.passed).lower(), r.detail]
                + ([f"{r.seconds:.3f}"] if args.timings else []) for r in results]
        return code, _csv_text(header, rows)
    lines = []
    for r in results:
        timing = f" ({r.seconds:.2f}s)" if args.timings else ""
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.number}. {r.name}{timing}: {r.detail}")
    lines.append(f"verified: {str(verified).lower()}")
    return code, "\n".join(lines) + "\n"


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    common.add_argument("--max-n", type=_nonneg_int, default=10, dest="max_n")
    common.add_argument("--max-m", type=_pos_int, default=5, dest="max_m")

    parser = argparse.ArgumentParser(
        prog="quotientrule",
        description="Exact n-th derivatives of reciprocals and quotients by partition sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="list partitions of n with their weights")
    p.add_argument("n", type=_nonneg_int)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("reciprocal", parents=[common], help="derivative jet of 1/v")
    p.add_argument("--v", type=_jet_arg, required=True, help="comma list v(x0),v'(x0),...")
    p.set_defaults(func=cmd_reciprocal)

    p = sub.add_parser("quotient", parents=[common], help="derivative jet of u/v")
    p.add_argument("--u", type=_jet_arg, required=True)
    p.add_argument("--v", type=_jet_arg, required=True)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("identities", parents=[common], help="check partition identities")
    p.add_argument("which", choices=(*identities.IDENTITY_NAMES, "all"))
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("logcoeffs", parents=[common], help="coefficients of (1/ln x)^(n), two ways")
    p.add_argument("n", type=_pos_int)
    p.set_defaults(func=cmd_logcoeffs)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds (non-deterministic)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        code, text = args.func(args)
    except SingularPointError:
        print(f"{parser.prog} {args.command}: error: the rule requires v ≠ 0 at the base point "
              "(first entry of --v is 0)", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
