"""Command-line front end.

    jspinor gen --seq hsj --from 0 --to 5
    jspinor series --seq hsjl --order 8 --format json
    jspinor poly --n 4 --eval-at 1/2
    jspinor quat --op mul --lhs i --rhs j
    jspinor verify --suite all --n-max 64 --strict
    jspinor isotropic --phi1 1 --phi2 u
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .hyperbolic import Hyperbolic
from .ring import parse_rational
from .sequences import (
    SeqKind, jacobsthal, jacobsthal_lucas, spinor_poly_binet, spinor_poly_term,
    spinor_term, split_quat_seq,
)
from .series import gen_function_series, poly_gen_series
from .spinor import HypSpinor, isotropic_vector
from .splitquat import SplitQuat, sq_conj, sq_mul, sq_norm
from .verifier import Grid, Report, get_identity, run_suite

__all__ = ["run", "main", "encode_terms", "decode_terms"]

LEGEND = "# u is the hyperbolic unit, u^2 = +1 (commonly written j)"

SEQUENCES = ("hsj", "hsjl", "j", "jl", "sjq", "sjlq")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _term(seq: str, n: int):
    if seq == "j":
        return jacobsthal(n)
    if seq == "jl":
        return jacobsthal_lucas(n)
    if seq == "sjq":
        return split_quat_seq(SeqKind.HSJ, n)
    if seq == "sjlq":
        return split_quat_seq(SeqKind.HSJL, n)
    return spinor_term(SeqKind(seq), n)


def _value_json(value):
    if isinstance(value, int):
        return str(value)
    return value.to_json()


def _value_from_json(seq: str, data):
    if seq in ("j", "jl"):
        return int(data)
    if seq in ("sjq", "sjlq"):
        return SplitQuat.from_json(data)
    return HypSpinor.from_json(data)


def encode_terms(seq: str, terms: Sequence[tuple[int, object]]) -> dict:
    return {"seq": seq, "terms": [{"n": n, "value": _value_json(v)} for n, v in terms]}


def decode_terms(data: dict) -> list[tuple[int, object]]:
    seq = data["seq"]
    return [(item["n"], _value_from_json(seq, item["value"])) for item in data["terms"]]


def _csv_row(n: int, value) -> list[str]:
    if isinstance(value, int):
        return [str(n), str(value)]
    if isinstance(value, SplitQuat):
        return [str(n)] + [str(x) for x in value.components]
    return [str(n), str(value.c1.re), str(value.c1.hy), str(value.c2.re), str(value.c2.hy)]


def _csv_header(sample) -> list[str]:
    if isinstance(sample, int):
        return ["n", "value"]
    if isinstance(sample, SplitQuat):
        return ["n", "a", "b", "c", "d"]
    return ["n", "c1_re", "c1_hy", "c2_re", "c2_hy"]


def _write_csv(out, rows) -> None:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    out.write(buf.getvalue())


def _emit_terms(args, terms, out, err) -> None:
    if args.format == "json":
        json.dump(encode_terms(args.seq, terms), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        _write_csv(out, [_csv_header(terms[0][1])] + [_csv_row(n, v) for n, v in terms])
    else:
        if any(isinstance(v, HypSpinor) for _, v in terms):
            print(LEGEND, file=err)
        for _, v in terms:
            print(v, file=out)


def _cmd_gen(args, out, err) -> int:
    if args.start < 0 or args.stop < args.start:
        raise UsageError("need 0 <= --from <= --to")
    terms = [(n, _term(args.seq, n)) for n in range(args.start, args.stop + 1)]
    _emit_terms(args, terms, out, err)
    return 0


def _cmd_series(args, out, err) -> int:
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    if args.seq == "poly":
        s = poly_gen_series(args.order, args.printed)
    else:
        s = gen_function_series(SeqKind(args.seq), args.order, args.printed)
    if args.format == "json":
        json.dump(s.to_json(), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        rows = [_csv_header(s[0])] + [_csv_row(n, c) for n, c in enumerate(s.coeffs)]
        _write_csv(out, rows)
    else:
        print(LEGEND, file=err)
        for n, c in enumerate(s.coeffs):
            print(f"x^{n}: {c}", file=out)
    return 0


def _cmd_poly(args, out, err) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    s = spinor_poly_binet(args.n) if args.binet else spinor_poly_term(args.n)
    if args.eval_at is not None:
        try:
            x0 = parse_rational(args.eval_at)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        s = s.map(lambda p: p(x0))
    _emit_terms(argparse.Namespace(format=args.format, seq="poly"), [(args.n, s)], out, err)
    return 0


def _parse_quat(text: Optional[str], flag: str) -> SplitQuat:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return SplitQuat.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_quat(args, out, err) -> int:
    p = _parse_quat(args.lhs, "--lhs")
    if args.op == "mul":
        result = sq_mul(p, _parse_quat(args.rhs, "--rhs"))
    elif args.op == "conj":
        result = sq_conj(p)
    else:
        result = sq_norm(p)
    if args.format == "json":
        payload = {"value": str(result)} if not isinstance(result, SplitQuat) else result.to_json()
        json.dump(payload, out)
        out.write("\n")
    else:
        print(result, file=out)
    return 0


def _print_report(report: Report, out) -> None:
    for entry in report.results:
        v = entry.verdict
        print(f"{entry.id:<18} {v.status.value:<16} {entry.citation}", file=out)
        if v.counterexample:
            ce = v.counterexample
            params = ", ".join(f"{k}={val}" for k, val in ce["params"].items())
            print(f"    printed: {entry.printed_statement}", file=out)
            print(f"    counterexample at {params}: lhs {ce['lhs']} != rhs {ce['rhs']}", file=out)
        if v.corrected_statement:
            print(f"    corrected: {v.corrected_statement}", file=out)
    print(f"# grid {report.grid.to_json()}; {report.runtime_ms:.0f} ms", file=out)


def _cmd_verify(args, out, err) -> int:
    try:
        grid = Grid(args.n_max, args.r_max, args.t_max, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ids = None
    if args.suite != "all":
        try:
            get_identity(args.suite)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        ids = [args.suite]
    report = run_suite(grid, ids, workers=args.workers)
    if args.format == "json":
        json.dump(report.to_json(), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        rows = [["id", "citation", "status", "counterexample", "corrected_statement"]]
        for e in report.results:
            v = e.verdict
            rows.append([e.id, e.citation, v.status.value,
                         json.dumps(v.counterexample) if v.counterexample else "",
                         v.corrected_statement or ""])
        _write_csv(out, rows)
    else:
        print(LEGEND, file=err)
        _print_report(report, out)
    if args.strict and report.has_bare_failures():
        return 2
    return 0


def _cmd_isotropic(args, out, err) -> int:
    try:
        phi1, phi2 = Hyperbolic.parse(args.phi1), Hyperbolic.parse(args.phi2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    (a1, a2, a3), q = isotropic_vector(phi1, phi2)
    if args.format == "json":
        json.dump({"alpha": [a.to_json() for a in (a1, a2, a3)], "form": q.to_json()}, out)
        out.write("\n")
    else:
        print(f"alpha = ({a1}, {a2}, {a3})", file=out)
        print(f"alpha1^2 + alpha2^2 - alpha3^2 = {q}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jspinor", description="Hyperbolic Jacobsthal spinor sequences and identity checks")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    fmt = dict(choices=("json", "csv", "pretty"), default="pretty")

    p = sub.add_parser("gen", help="table of sequence terms")
    p.add_argument("--seq", choices=SEQUENCES, required=True)
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", dest="stop", type=int, default=10)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("series", help="expand a generating function")
    p.add_argument("--seq", choices=("hsj", "hsjl", "poly"), required=True)
    p.add_argument("--order", type=int, default=32)
    p.add_argument("--printed", action="store_true", help="expand the published numerator")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("poly", help="polynomial spinor HSJ_n(x)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval-at", dest="eval_at")
    p.add_argument("--binet", action="store_true", help="compute through the closed form")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("quat", help="split-quaternion arithmetic")
    p.add_argument("--op", choices=("mul", "conj", "norm"), required=True)
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    p.set_defaults(func=_cmd_quat)

    p = sub.add_parser("verify", help="check the identity registry")
    p.add_argument("--suite", default="all")
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--r-max", type=int, default=8)
    p.add_argument("--t-max", type=int, default=8)
    p.add_argument("--order", type=int, default=32)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("isotropic", help="isotropic vector from two spinor parameters")
    p.add_argument("--phi1", required=True)
    p.add_argument("--phi2", required=True)
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    p.set_defaults(func=_cmd_isotropic)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out, err)
    except UsageError as exc:
        print(f"jspinor: error: {exc}", file=err)
        print(parser.format_usage(), file=err, end="")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
