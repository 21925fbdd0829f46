"""Command-line interface: table generation, polynomial emission, verification.

Subcommands::

    poly      emit A_n or C_n by a chosen construction route
    numbers   Bernoulli / cosecant / tangent-half number tables
    coeffs    the alpha/lambda triangles or the u/v triangles
    verify    run a verification suite (identities | uv | integrals)
    selftest  every exact suite plus every quadrature suite

Exact values are printed as "p/q" strings, never floats; floats appear
only inside ``verify integrals`` reports.  Exit codes: 0 all checks pass,
1 a check failed, 2 usage error, 3 quadrature failed to converge.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from .ac_families import (
    FAMILY_ROUTES,
    ROUTE_RECURRENCE,
    ROUTE_RESIDUE,
    build_a_by_residue_recurrence,
    build_by_recurrence,
    build_route,
    identities_report,
    lambda_alpha_tables,
)
from .exact_core import Polynomial, format_rational, poly_to_json
from .generalized_uv import build_uv, check_uv_consistency, row_width
from .operator_lab import SUITES, integrals_report
from .report import VerificationReport
from .special_numbers import (
    bernoulli_numbers,
    cosecant_number,
    tangent_half_coeff,
)

ALL_ROUTES = FAMILY_ROUTES + (ROUTE_RESIDUE,)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


def canonical_json(obj) -> str:
    """Deterministic JSON rendering: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def emit_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# LaTeX rendering of exact polynomials.

_LCM_CAP = 10**6


def _power_string(k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "X"
    if k < 10:
        return f"X^{k}"
    return f"X^{{{k}}}"


def _join_terms(terms) -> str:
    """terms: list of (sign, body) with sign in {+1, -1}; joined compactly."""
    out = []
    for i, (sign, body) in enumerate(terms):
        if i == 0:
            out.append("-" + body if sign < 0 else body)
        else:
            out.append(("-" if sign < 0 else "+") + body)
    return "".join(out)


def _integer_terms(values) -> str:
    """Descending-power rendering of integer coefficients (low-first input)."""
    terms = []
    for k in range(len(values) - 1, -1, -1):
        v = values[k]
        if v == 0:
            continue
        mag = abs(v)
        body = ("" if mag == 1 and k > 0 else str(mag)) + _power_string(k)
        terms.append((1 if v > 0 else -1, body))
    return _join_terms(terms) if terms else "0"


def latex_polynomial(p: Polynomial) -> str:
    """Canonical LaTeX: a single common-denominator fraction when the
    denominator lcm stays small, per-term fractions otherwise."""
    coeffs = [Fraction(c) for c in p.coeffs]
    if not coeffs:
        return "0"
    denom = math.lcm(*(c.denominator for c in coeffs))
    if denom <= _LCM_CAP:
        numerators = [int(c * denom) for c in coeffs]
        body = _integer_terms(numerators)
        if denom == 1 or body == "0":
            return body
        return rf"\frac{{{body}}}{{{denom}}}"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if mag.denominator == 1:
            coef = "" if mag == 1 and k > 0 else str(mag.numerator)
        else:
            coef = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        body = coef + _power_string(k)
        terms.append((1 if c > 0 else -1, body or "1"))
    return _join_terms(terms)


# ---------------------------------------------------------------------------
# Subcommand implementations.  Each returns (exit_code, output_text).


def _cmd_poly(args) -> tuple:
    n = args.n
    if args.route == ROUTE_RESIDUE:
        if args.family == "c":
            raise UsageError("the residue route builds only the A family")
        p = build_a_by_residue_recurrence(n)[n]
    else:
        family = build_route(args.route, n)
        p = family.a(n) if args.family == "a" else family.c(n)
    if args.format == "json":
        doc = {
            "family": args.family,
            "n": n,
            "route": args.route,
            "coefficients": poly_to_json(p),
        }
        return EXIT_OK, canonical_json(doc)
    if args.format == "csv":
        rows = [(k, format_rational(c)) for k, c in enumerate(p.coeffs)]
        return EXIT_OK, emit_csv(rows)
    return EXIT_OK, latex_polynomial(p)


_NUMBER_KINDS = {
    "bernoulli": lambda n, table: table[n],
    "cosecant": lambda n, table: cosecant_number(n, table),
    "tangent": lambda n, table: tangent_half_coeff(n, table),
}


def _cmd_numbers(args) -> tuple:
    table = bernoulli_numbers(args.max_n + 1)
    fn = _NUMBER_KINDS[args.kind]
    values = [fn(n, table) for n in range(args.max_n + 1)]
    if args.format == "json":
        doc = {
            "kind": args.kind,
            "max_n": args.max_n,
            "values": [format_rational(v) for v in values],
        }
        return EXIT_OK, canonical_json(doc)
    rows = [(n, format_rational(v)) for n, v in enumerate(values)]
    return EXIT_OK, emit_csv(rows)


def _cmd_coeffs(args) -> tuple:
    if args.table == "uv":
        uv = build_uv(args.max_n)
        entries = [
            (n, k, uv.u[(n, k)], uv.v[(n, k)])
            for n in range(1, args.max_n + 1)
            for k in range(1, row_width(n) + 1)
        ]
        if args.format == "json":
            doc = {
                "table": "uv",
                "max_n": args.max_n,
                "rows": [
                    {"n": n, "k": k, "u": format_rational(u), "v": format_rational(v)}
                    for n, k, u, v in entries
                ],
            }
            return EXIT_OK, canonical_json(doc)
        rows = [
            (n, k, format_rational(u), format_rational(v))
            for n, k, u, v in entries
        ]
        return EXIT_OK, emit_csv(rows)

    tables = lambda_alpha_tables(build_by_recurrence(args.max_n))
    if args.format == "json":
        doc = {
            "table": "alpha-lambda",
            "max_n": args.max_n,
            "rows": [
                {
                    "n": n,
                    "alpha": [
                        format_rational(tables.alpha[(n, k)]) for k in range(n + 2)
                    ],
                    "lambda": [
                        format_rational(tables.lam[(n, k)]) for k in range(n + 2)
                    ],
                }
                for n in range(args.max_n + 1)
            ],
        }
        return EXIT_OK, canonical_json(doc)
    rows = [
        (
            n,
            k,
            format_rational(tables.alpha[(n, k)]),
            format_rational(tables.lam[(n, k)]),
        )
        for n in range(args.max_n + 1)
        for k in range(n + 2)
    ]
    return EXIT_OK, emit_csv(rows)


def _report_output(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(report.to_json_dict())
    rows = [
        (report.suite, c.id, c.status, c.error_metric) for c in report.checks
    ]
    return emit_csv(rows)


def _cmd_verify(args) -> tuple:
    report = _build_verify_report(args)
    return report.exit_code(), _report_output(report, args.format)


def _build_verify_report(args) -> VerificationReport:
    if args.suite_name == "identities":
        return identities_report(args.max_n)
    if args.suite_name == "uv":
        family = build_by_recurrence(args.max_n)
        uv = build_uv(args.max_n)
        report = VerificationReport(suite="uv")
        report.extend(check_uv_consistency(uv, family))
        return report
    return integrals_report(
        suite=args.suite, tolerance=args.tolerance, grid_size=args.grid_size
    )


def _cmd_selftest(args) -> tuple:
    reports = [
        identities_report(args.max_n),
    ]
    family = build_by_recurrence(args.max_n)
    uv_report = VerificationReport(suite="uv")
    uv_report.extend(check_uv_consistency(build_uv(max(args.max_n, 1)), family))
    reports.append(uv_report)
    reports.append(
        integrals_report(
            suite="all", tolerance=args.tolerance, grid_size=args.grid_size
        )
    )
    code = max(r.exit_code() for r in reports)
    if args.format == "json":
        totals = {"total": 0, "passed": 0, "failed": 0, "errors": 0}
        for r in reports:
            for key, val in r.counts.items():
                totals[key] += val
        doc = {
            "reports": [r.to_json_dict() for r in reports],
            "summary": totals,
        }
        return code, canonical_json(doc)
    rows = []
    for r in reports:
        rows.extend((r.suite, c.id, c.status, c.error_metric) for c in r.checks)
    return code, emit_csv(rows)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acpolys",
        description="Exact polynomial families, coefficient tables, and "
        "verification of their integral and operator identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="emit A_n or C_n by a chosen route")
    p_poly.add_argument("--family", choices=("a", "c"), required=True)
    p_poly.add_argument("--n", type=int, required=True, metavar="N")
    p_poly.add_argument("--route", choices=ALL_ROUTES, default=ROUTE_RECURRENCE)
    p_poly.add_argument(
        "--format", choices=("json", "csv", "latex"), default="json"
    )

    p_num = sub.add_parser("numbers", help="special-number tables")
    p_num.add_argument(
        "--kind", choices=tuple(_NUMBER_KINDS), required=True
    )
    p_num.add_argument("--max-n", type=int, default=24, metavar="N")
    p_num.add_argument("--format", choices=("json", "csv"), default="json")

    p_coeffs = sub.add_parser("coeffs", help="coefficient triangles")
    p_coeffs.add_argument("table", choices=("alpha-lambda", "uv"))
    p_coeffs.add_argument("--max-n", type=int, default=24, metavar="N")
    p_coeffs.add_argument("--format", choices=("json", "csv"), default="json")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "suite_name", choices=("identities", "uv", "integrals")
    )
    p_verify.add_argument("--max-n", type=int, default=24, metavar="N")
    p_verify.add_argument(
        "--suite", choices=SUITES + ("all",), default="all",
        help="which integral suite (verify integrals only)",
    )
    p_verify.add_argument("--tolerance", type=float, default=1e-8)
    p_verify.add_argument("--grid-size", type=int, default=200)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")

    p_self = sub.add_parser(
        "selftest", help="all exact suites plus all quadrature suites"
    )
    p_self.add_argument("--max-n", type=int, default=24, metavar="N")
    p_self.add_argument("--tolerance", type=float, default=1e-8)
    p_self.add_argument("--grid-size", type=int, default=200)
    p_self.add_argument("--format", choices=("json", "csv"), default="json")

    return parser


_DISPATCH = {
    "poly": _cmd_poly,
    "numbers": _cmd_numbers,
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
    "selftest": _cmd_selftest,
}


def run(argv=None) -> int:
    """Parse argv, execute, print the result; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, output = _DISPATCH[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"acpolys: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if output:
        print(output)
    return code


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
