"""Command-line surface: structure queries, table emission, expression
evaluation, and the verification-suite runner.

JSON output is UTF-8 with stable (construction) key order; `verify` exits
nonzero iff any check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .classify import classify_group, generate_table
from .core import MAX_DIMENSION, Multivector, Signature, blade_name
from .expressions import ParseError, eval_expression
from .structure import AlgebraData, clidata
from .verify import (
    SUITE_NAMES,
    Report,
    all_passed,
    report_to_dict,
    run_suite,
)


def multivector_to_map(mv: Multivector) -> dict[str, str]:
    """Coefficient map keyed by blade name, coefficients as exact strings."""
    return {blade_name(m, mv.sig.n): str(c) for m, c in mv.terms()}


def multivector_from_map(obj: dict[str, str], sig: Signature) -> Multivector:
    from fractions import Fraction

    from .core import mask_from_indices

    terms = {}
    for name, coeff in obj.items():
        if name == "1":
            mask = 0
        elif name.startswith("e[") and name.endswith("]"):
            mask = mask_from_indices(int(i) for i in name[2:-1].split(","))
        elif name.startswith("e"):
            mask = mask_from_indices(int(ch) for ch in name[1:])
        else:
            raise ValueError(f"bad blade name {name!r}")
        terms[mask] = Fraction(coeff)
    return Multivector(sig, terms)


def algebra_data_to_dict(data: AlgebraData) -> dict[str, Any]:
    n = data.sig.n
    return {
        "field": data.field_kind,
        "simple": data.simple,
        "k": data.k,
        "N": data.matrix_size,
        "idempotent": multivector_to_map(data.idempotent),
        "data5": [blade_name(g.mask, n) for g in data.data5],
        "data6": [blade_name(g.mask, n) for g in data.data6],
        "data7": [blade_name(g.mask, n) for g in data.data7],
    }


def _signature_or_exit(parser: argparse.ArgumentParser, p: int, q: int) -> Signature:
    try:
        return Signature(p, q)
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError  # unreachable


def _emit_json(obj: Any) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def _cmd_data(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    sig = _signature_or_exit(parser, args.p, args.q)
    data = clidata(sig)
    if args.json:
        _emit_json(algebra_data_to_dict(data))
        return 0
    n = sig.n
    field_names = {"real": "R", "complex": "C", "quaternionic": "H"}
    print(
        f"{sig}: {'simple' if data.simple else 'semisimple'}, "
        f"field {field_names[data.field_kind]} (dim {data.dim_k} over R), "
        f"k={data.k}, N={data.matrix_size}"
    )
    print(f"f = {data.idempotent}")
    for key, entries in (("data5", data.data5), ("data6", data.data6), ("data7", data.data7)):
        print(f"{key} = [{', '.join(blade_name(g.mask, n) for g in entries)}]")
    return 0


def _cmd_classify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    sig = _signature_or_exit(parser, args.p, args.q)
    label = classify_group(sig)
    if args.json:
        _emit_json({"family": label.family, "rank": label.rank, "boxes": label.boxes})
    else:
        mark = label.marker()
        print(f"{label.pretty()} {mark}".rstrip())
    return 0


def _cmd_table(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.which not in (1, 2, 3, 4, 5):
        parser.error(f"table number must be 1..5, got {args.which}")
    rows = generate_table(args.which)
    if args.json:
        _emit_json(
            [
                {
                    "signature": [row.sig.p, row.sig.q],
                    "family": row.label.family,
                    "rank": row.label.rank,
                    "boxes": row.label.boxes,
                    "matrix_ring": row.matrix_ring,
                }
                for row in rows
            ]
        )
        return 0
    for row in rows:
        print(row.text())
    return 0


def _cmd_eval(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    sig = _signature_or_exit(parser, args.p, args.q)
    try:
        value = eval_expression(args.expression, sig)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _emit_json(multivector_to_map(value))
    else:
        print(value)
    return 0


def _format_report(report: Report) -> str:
    where = f"({report.signature[0]},{report.signature[1]})" if report.signature else "-"
    status = "pass" if report.passed else "FAIL"
    line = f"{report.suite:<9} {where:<7} {status}  [{report.elapsed:.3f}s]"
    if report.passed:
        return line
    failures = [c for c in report.checks if not c.passed]
    details = "; ".join(
        f"{c.name}: {c.counterexample}" if c.counterexample else c.name
        for c in failures
    )
    return f"{line}  {details}"


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.suite not in SUITE_NAMES:
        parser.error(f"unknown suite {args.suite!r}; choose from {', '.join(SUITE_NAMES)}")
    if args.max_dim > 9:
        parser.error("--max-dim must be at most 9")
    reports = run_suite(args.suite, max_dim=args.max_dim, seed=args.seed)
    if args.json:
        _emit_json([report_to_dict(r) for r in reports])
    else:
        for report in reports:
            print(_format_report(report))
        total = sum(len(r.checks) for r in reports)
        failed = sum(1 for r in reports for c in r.checks if not c.passed)
        print(f"{total - failed}/{total} checks passed")
    return 0 if all_passed(reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffordlab",
        description="Exact-arithmetic Clifford algebra workbench for Cl(p,q), p+q <= %d"
        % MAX_DIMENSION,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_data = sub.add_parser("data", help="structure record of Cl(p,q)")
    p_data.add_argument("p", type=int)
    p_data.add_argument("q", type=int)
    p_data.add_argument("--json", action="store_true")

    p_classify = sub.add_parser("classify", help="automorphism group of the transposition product")
    p_classify.add_argument("p", type=int)
    p_classify.add_argument("q", type=int)
    p_classify.add_argument("--json", action="store_true")

    p_table = sub.add_parser("table", help="emit one of the five reference tables")
    p_table.add_argument("which", type=int)
    p_table.add_argument("--json", action="store_true")

    p_eval = sub.add_parser("eval", help="evaluate a multivector expression")
    p_eval.add_argument("expression")
    p_eval.add_argument("-p", type=int, required=True, dest="p")
    p_eval.add_argument("-q", type=int, required=True, dest="q")
    p_eval.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--max-dim", type=int, default=6, dest="max_dim")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", action="store_true")

    return parser


_HANDLERS = {
    "data": _cmd_data,
    "classify": _cmd_classify,
    "table": _cmd_table,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](parser, args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
