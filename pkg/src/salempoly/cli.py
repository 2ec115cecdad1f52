"""Command-line front end.

Subcommands: classify, minpoly, family, search, shortness, verify-table,
decode.  Output is a human table by default; --format json/csv where it
applies.  All numeric output is decimal strings, precision controlled by
--digits or SALEMPOLY_DIGITS (default 9).  Exit status: 0 success, 1 for
verification mismatches, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cyclofactor import pisot_minpoly, salem_minpoly, strip_cyclotomic
from .families import (
    family_spec,
    min_degree,
    pisot_exception_indices,
    rho_enclosure,
)
from .intpoly import DomainError, IntPoly, parse_poly, parse_rational, to_human, to_machine
from .search import (
    SearchConfig,
    SporadicCode,
    decode_sporadic,
    encode_sporadic,
    run_search,
    shortness,
)
from .tables import TABLE_IDS, salem_number_in_family, verify_table
from .unitcircle import (
    LABEL_PISOT,
    LABEL_SALEM,
    classify,
    decimal_root,
    default_digits,
    isolate_root_gt_one,
)


def _poly_arg(text: str) -> IntPoly:
    try:
        return parse_poly(text)
    except DomainError as exc:
        raise SystemExit(f"error: {exc}")


def cmd_classify(args) -> int:
    p = _poly_arg(args.poly)
    cert = classify(p, digits=args.digits)
    if args.format == "json":
        print(json.dumps(cert.to_json_dict()))
        return 0
    print(f"polynomial: {to_human(p)}")
    print(f"label: {cert.label}")
    print(f"roots inside/on/outside the unit circle: {cert.inside}/{cert.on_circle}/{cert.outside}")
    if cert.distinguished_root is not None:
        rem = strip_cyclotomic(p).remainder
        text, _ = decimal_root(rem, cert.distinguished_root, args.digits)
        print(f"distinguished root: {text}")
    return 0


def cmd_minpoly(args) -> int:
    p = _poly_arg(args.poly)
    cert = classify(p, digits=args.digits)
    if cert.label == LABEL_SALEM:
        m = salem_minpoly(p)
    elif cert.label == LABEL_PISOT:
        m = pisot_minpoly(p)
    else:
        print(f"error: {to_human(p)} is {cert.label}, not Salem or Pisot", file=sys.stderr)
        return 1
    fact = strip_cyclotomic(p)
    cyc = " ".join(f"Phi_{d}^{m_}" if m_ > 1 else f"Phi_{d}" for d, m_ in fact.factors)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "label": cert.label,
                    "min_poly": json.loads(to_machine(m)),
                    "cyclotomic_factors": [[d, mult] for d, mult in fact.factors],
                }
            )
        )
        return 0
    print(f"label: {cert.label}")
    print(f"minimal polynomial: {to_human(m)} (degree {m.degree})")
    print(f"cyclotomic part: {cyc if cyc else '1'}")
    return 0


def cmd_family(args) -> int:
    p = _poly_arg(args.pisot)
    eps = 1 if args.eps in ("+1", "1") else -1
    spec = family_spec(p, eps)
    data = {
        "P": to_human(spec.p),
        "eps": spec.eps,
        "n0": spec.n0,
        "schedule": [[a, d] for a, d in spec.schedule],
    }
    if not spec.shared_factor.is_one():
        data["shared_cyclotomic_factor"] = to_human(spec.shared_factor)
    if args.exceptions:
        data["pisot_exception_indices"] = list(
            pisot_exception_indices(spec.p, spec.eps, args.exception_bound)
        )
        data["exception_bound"] = args.exception_bound
        data["repeated_factor_indices"] = list(spec.repeated_indices)
    if args.min_degree is not None:
        data["min_degree"] = {"n": args.min_degree, "degree": min_degree(spec, args.min_degree)}
    if args.rho is not None:
        enc = rho_enclosure(spec, args.rho, args.digits)
        from .families import family_minpoly

        text, _ = decimal_root(family_minpoly(spec, args.rho), enc, args.digits)
        data["rho"] = {"n": args.rho, "value": text}
    if args.format == "json":
        print(json.dumps(data))
        return 0
    print(f"P = {data['P']}, eps = {spec.eps:+d}")
    if "shared_cyclotomic_factor" in data:
        print(f"shared cyclotomic factor: {data['shared_cyclotomic_factor']}")
    if args.n0 or not (args.schedule or args.exceptions or args.min_degree or args.rho):
        print(f"n0 = {spec.n0}")
    if args.schedule or not (args.n0 or args.exceptions or args.min_degree or args.rho):
        pairs = " ".join(f"({a},{d})" for a, d in spec.schedule)
        print(f"schedule: {pairs}")
    if args.exceptions:
        print(
            f"pisot exceptions (n <= {args.exception_bound}): "
            f"{data['pisot_exception_indices']}"
        )
        print(f"repeated factors at n = {data['repeated_factor_indices']}")
    if args.min_degree is not None:
        print(f"deg minpoly(rho_{args.min_degree}) = {data['min_degree']['degree']}")
    if args.rho is not None:
        print(f"rho_{args.rho} = {data['rho']['value']}")
    return 0


def _search_csv(report, digits: int) -> str:
    lines = ["code,polynomial,salem_number,min_poly_degree,shortness_flags"]
    short5 = None
    for entry in report.sporadic:
        code = encode_sporadic(entry.poly) if report.config.length == 6 else None
        flags = []
        if salem_number_in_family(entry.min_poly):
            flags.append("f")
        if short5 is None:
            from .tables import _table1_min_polys

            short5 = _table1_min_polys()
        if entry.min_poly in short5:
            flags.append("5")
        lines.append(
            ",".join(
                [
                    str(code) if code else "",
                    to_human(entry.poly),
                    entry.decimal,
                    str(entry.min_poly.degree),
                    "".join(flags),
                ]
            )
        )
    return "\n".join(lines)


def cmd_search(args) -> int:
    cfg = SearchConfig(
        length=args.length,
        lo=parse_rational(args.min),
        hi=parse_rational(args.max),
        max_gap_override=args.max_gap,
        digits=args.digits,
        jobs=args.jobs,
    )
    report = run_search(cfg)
    if args.format == "json":
        out = {
            "exhaustive": report.exhaustive,
            "sporadic": [
                {
                    "polynomial": to_human(e.poly),
                    "salem_number": e.decimal,
                    "min_poly": to_human(e.min_poly),
                }
                for e in report.sporadic
            ],
            "family_hits": [
                {"P": to_human(h.prefix), "eps": h.eps, "kind": h.kind}
                for h in report.family_hits
            ],
            "obstructions": [
                {"prefix": to_human(o.prefix), "reason": o.reason}
                for o in report.obstructions
            ],
            "truncated_bounds": [list(t) for t in report.truncated_bounds],
        }
        print(json.dumps(out))
        return 0
    if args.format == "csv":
        print(_search_csv(report, args.digits))
        return 0
    print(
        f"length {cfg.length} Salem polynomials with Salem number in "
        f"[{cfg.lo}, {cfg.hi}]: {len(report.sporadic)} sporadic, "
        f"{len(report.family_hits)} family hits, exhaustive={report.exhaustive}"
    )
    for e in report.sporadic:
        print(f"  {e.decimal}  {to_human(e.poly)}")
    if args.families and report.family_hits:
        print("families:")
        for h in report.family_hits:
            print(f"  z^n ({to_human(h.prefix)}) {'+' if h.eps > 0 else '-'} P*(z)  [{h.kind}]")
    for o in report.obstructions:
        print(f"  obstruction at {to_human(o.prefix)}: {o.reason}")
    return 0


def cmd_shortness(args) -> int:
    m = _poly_arg(args.poly)
    result = shortness(m, max_length=args.max_length, jobs=args.jobs)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "shortness": result.value,
                    "witnesses": [to_human(w) for w in result.witnesses],
                    "searched_to": result.searched_to,
                    "exhaustive": result.exhaustive,
                }
            )
        )
        return 0
    if result.value is None:
        print(f"shortness > {result.searched_to} (no multiple found)")
        return 0
    print(f"shortness: {result.value}")
    for w in result.witnesses:
        print(f"  {to_human(w)} (degree {w.degree})")
    return 0


def cmd_verify_table(args) -> int:
    ids = list(TABLE_IDS) if args.table == "all" else [args.table]
    failures = 0
    for table_id in ids:
        for row in verify_table(table_id, jobs=args.jobs):
            status = "ok" if row.ok else "FAIL"
            detail = f"  ({row.detail})" if row.detail and not row.ok else ""
            print(f"[{row.table}] {row.row}: {status}{detail}")
            failures += 0 if row.ok else 1
    if failures:
        print(f"{failures} row(s) failed")
        return 1
    return 0


def cmd_decode(args) -> int:
    code = SporadicCode.parse(args.code)
    p = decode_sporadic(code)
    if args.format == "json":
        print(json.dumps({"code": str(code), "polynomial": to_human(p)}))
        return 0
    print(to_human(p))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="salempoly",
        description="Exact computation with Salem and Pisot polynomials",
    )
    parser.add_argument("--digits", type=int, default=default_digits(),
                        help="decimal digits for printed roots (default 9)")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="locate roots and label a polynomial")
    c.add_argument("--poly", required=True)
    c.add_argument("--format", choices=["table", "json"], default="table")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("minpoly", help="minimal polynomial of a Salem/Pisot polynomial")
    c.add_argument("--poly", required=True)
    c.add_argument("--format", choices=["table", "json"], default="table")
    c.set_defaults(func=cmd_minpoly)

    c = sub.add_parser("family", help="Salem family data for a Pisot polynomial")
    c.add_argument("--pisot", required=True)
    c.add_argument("--eps", required=True, choices=["+1", "1", "-1"])
    c.add_argument("--n0", action="store_true")
    c.add_argument("--schedule", action="store_true")
    c.add_argument("--exceptions", action="store_true")
    c.add_argument("--exception-bound", type=int, default=500)
    c.add_argument("--min-degree", type=int, metavar="N")
    c.add_argument("--rho", type=int, metavar="N")
    c.add_argument("--format", choices=["table", "json"], default="table")
    c.set_defaults(func=cmd_family)

    c = sub.add_parser("search", help="enumerate Salem polynomials of a given length")
    c.add_argument("--length", type=int, required=True)
    c.add_argument("--min", required=True, help="lower interval endpoint (rational)")
    c.add_argument("--max", required=True, help="upper interval endpoint (rational)")
    c.add_argument("--format", choices=["table", "json", "csv"], default="table")
    c.add_argument("--families", action="store_true", help="list detected family hits")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--max-gap", type=int, default=None,
                   help="cap every gap (renders the search non-exhaustive)")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("shortness", help="least length of a Salem polynomial for a number")
    c.add_argument("--poly", required=True, help="the minimal polynomial")
    c.add_argument("--max-length", type=int, default=6)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--format", choices=["table", "json"], default="table")
    c.set_defaults(func=cmd_shortness)

    c = sub.add_parser("verify-table", help="recompute and diff a vendored golden table")
    c.add_argument("table", choices=list(TABLE_IDS) + ["all"])
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_verify_table)

    c = sub.add_parser("decode", help="decode an [n,k,d,eps] sporadic code")
    c.add_argument("--code", required=True, help="n,k,d,eps")
    c.add_argument("--format", choices=["table", "json"], default="table")
    c.set_defaults(func=cmd_decode)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
