"""Command-line interface.

Every subcommand emits a single JSON document (schema "simplest-fields/1"):
all integers are serialized as decimal strings and rationals as
{"num": ..., "den": ...} objects so consumers never overflow.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 parameter outside the
certified hypotheses.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .family import companion_poly, family_poly, specialize
from .identities import run_identity_suite
from .numberfield import ParameterNotCoveredError, number_field
from .orders import integral_basis, order_discriminant, period_length_bound
from .periodicity import (
    DUAL_DENOMINATOR_EXPONENT,
    FINAL_PERIOD_TABLE,
    PERIOD_BOUND_TABLE,
    check_dual_denominator_table,
    dual_basis,
    minimality_witness,
    period_scan,
)

SCHEMA = "simplest-fields/1"

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_NOT_COVERED = 3


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return {"num": str(x.numerator), "den": str(x.denominator)}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x)!r}")


def _emit(args, command: dict, status: str, result: dict, started: float) -> None:
    doc = {
        "schema": SCHEMA,
        "command": _jsonable(command),
        "status": status,
        "result": _jsonable(result),
        "timing_ms": round((time.monotonic() - started) * 1000, 3),
    }
    text = json.dumps(doc, indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_family(args) -> int:
    started = time.monotonic()
    command = {"subcommand": "family", "n": args.n, "t": args.t, "symbolic": args.symbolic}
    if args.symbolic or args.t is None:
        fam = family_poly(args.n)
        result = {
            "family_coeffs_in_m": [list(c.coeffs) for c in fam.coeffs],
            "companion_coeffs": list(companion_poly(args.n).coeffs),
        }
    else:
        sp = specialize(args.n, args.t)
        result = {
            "m_rule": sp.m_rule,
            "family_coeffs": list(sp.poly.coeffs),
            "companion_coeffs": list(companion_poly(args.n).coeffs),
        }
    _emit(args, command, "ok", result, started)
    return EXIT_OK


def cmd_identities(args) -> int:
    started = time.monotonic()
    command = {"subcommand": "identities", "n_max": args.n_max, "seed": args.seed, "trials": args.trials}
    results = run_identity_suite(args.n_max, seed=args.seed, trials=args.trials)
    failures = [r for r in results if not r.ok]
    result = {
        "checks": len(results),
        "failures": [{"name": r.name, "detail": r.detail} for r in failures],
        "items": [{"name": r.name, "ok": r.ok} for r in results],
    }
    _emit(args, command, "ok" if not failures else "fail", result, started)
    return EXIT_OK if not failures else EXIT_VERIFICATION_FAILURE


def _order_payload(o) -> dict:
    return {
        "den": o.den,
        "basis": [list(r) for r in o.basis],
        "index": o.index,
        "field_discriminant": order_discriminant(o),
    }


def cmd_integral_basis(args) -> int:
    started = time.monotonic()
    command = {
        "subcommand": "integral-basis",
        "n": args.n,
        "t": args.t,
        "strategy": args.strategy,
        "gate": args.gate,
    }
    field = number_field(args.n, args.t)
    strategies = ["enumerate", "radical"] if args.strategy == "both" else [args.strategy]
    orders = {s: integral_basis(field, strategy=s, gate=args.gate) for s in strategies}
    agree = len({o.fingerprint for o in orders.values()}) == 1
    result = {
        "poly_coeffs": list(field.poly.coeffs),
        "poly_discriminant": field.disc,
        "witness_prime": field.witness,
        "orders": {s: _order_payload(o) for s, o in orders.items()},
        "strategies_agree": agree,
    }
    _emit(args, command, "ok" if agree else "fail", result, started)
    return EXIT_OK if agree else EXIT_VERIFICATION_FAILURE


def cmd_dual_basis(args) -> int:
    started = time.monotonic()
    command = {"subcommand": "dual-basis", "n": args.n, "t": args.t}
    db = dual_basis(number_field(args.n, args.t))
    result = {
        "matrix": [list(row) for row in db.matrix],
        "denominator": db.denominator,
        "denominator_law_ok": db.law_ok,
    }
    ok = db.law_ok is not False
    _emit(args, command, "ok" if ok else "fail", result, started)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILURE


def _scan_payload(report) -> dict:
    return {
        "modulus": report.modulus,
        "gate": report.gate,
        "consistent": report.consistent,
        "inconsistent_classes": list(report.inconsistent),
        "scanned_classes": list(report.scanned_classes),
        "classes": {
            str(r): [{"t": t, "den": fp[0], "basis": [list(row) for row in fp[1]]} for t, fp in members]
            for r, members in sorted(report.classes.items())
        },
        "skipped": [{"t": t, "reason": reason} for t, reason in report.skipped],
    }


def cmd_period_scan(args) -> int:
    started = time.monotonic()
    command = {
        "subcommand": "period-scan",
        "n": args.n,
        "modulus": args.modulus,
        "t_min": args.t_min,
        "t_max": args.t_max,
        "strategy": args.strategy,
        "gate": args.gate,
        "workers": args.workers,
        "residues": args.residues,
    }
    report = period_scan(
        args.n,
        args.modulus,
        range(args.t_min, args.t_max + 1),
        gate=args.gate,
        strategy=args.strategy,
        workers=args.workers,
        residues=args.residues,
    )
    payload = _scan_payload(report)
    if args.modulus > 1:
        witnesses = minimality_witness(args.n, args.modulus, report)
        payload["minimality_witnesses"] = {str(p): list(w) if w else None for p, w in witnesses.items()}
    _emit(args, command, "ok" if report.consistent else "fail", payload, started)
    return EXIT_OK if report.consistent else EXIT_VERIFICATION_FAILURE


def cmd_verify_tables(args) -> int:
    started = time.monotonic()
    command = {
        "subcommand": "verify-tables",
        "scope": args.scope,
        "t_max": args.t_max,
        "samples": args.samples,
        "classes_12": args.classes_12,
        "workers": args.workers,
    }
    result: dict = {}
    ok = True

    if args.scope in ("delta", "all"):
        check = check_dual_denominator_table(range(2, 13), args.samples)
        result["dual_denominator_table"] = {
            "ok": check.ok,
            "checked": len(check.entries),
            "failures": [list(f) for f in check.failures],
        }
        ok = ok and check.ok

    if args.scope in ("bounds", "all"):
        chain = []
        for n, final in sorted(FINAL_PERIOD_TABLE.items()):
            improved = PERIOD_BOUND_TABLE[n]
            coarse = period_length_bound(n)
            chain.append(
                {
                    "n": n,
                    "final": final,
                    "improved_bound": improved,
                    "coarse_bound": coarse,
                    "divisibility_ok": improved % final == 0 and coarse % improved == 0,
                }
            )
        bounds_ok = all(c["divisibility_ok"] for c in chain)
        result["bound_chain"] = {"ok": bounds_ok, "rows": chain}
        ok = ok and bounds_ok

    if args.scope in ("final", "all"):
        scans = {}
        for n, modulus in sorted(FINAL_PERIOD_TABLE.items()):
            if n == 12:
                residues = list(range(args.classes_12))
                t_lo, t_hi = -2 * modulus - args.t_max, 2 * modulus + args.t_max
            else:
                residues = None
                t_lo, t_hi = -args.t_max, args.t_max
            report = period_scan(
                n,
                modulus,
                range(t_lo, t_hi + 1),
                workers=args.workers,
                residues=residues,
            )
            witnesses = minimality_witness(n, modulus, report)
            scans[n] = {
                "modulus": modulus,
                "consistent": report.consistent,
                "classes_scanned": len(report.scanned_classes),
                "parameters_scanned": sum(len(m) for m in report.classes.values()),
                "minimality_witnesses": {p: list(w) if w else None for p, w in witnesses.items()},
            }
            ok = ok and report.consistent
        result["final_period_table"] = scans

    _emit(args, command, "ok" if ok else "fail", result, started)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplest-fields",
        description="Exact constructions and verifications for generalized simplest number field families.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("family", help="emit family and companion polynomial coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--symbolic", action="store_true", help="emit coefficients as polynomials in m")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("identities", help="run the structural identity suite")
    p.add_argument("--n-max", type=int, default=12, dest="n_max")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("integral-basis", help="integral basis of one field")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--strategy", choices=["enumerate", "radical", "both"], default="radical")
    p.add_argument("--gate", choices=["strict", "relaxed"], default="strict")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_integral_basis)

    p = sub.add_parser("dual-basis", help="trace-dual basis of the power basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dual_basis)

    p = sub.add_parser("period-scan", help="compare integral-basis fingerprints per residue class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--t-min", type=int, required=True, dest="t_min")
    p.add_argument("--t-max", type=int, required=True, dest="t_max")
    p.add_argument("--strategy", choices=["enumerate", "radical"], default="radical")
    p.add_argument("--gate", choices=["strict", "relaxed"], default="strict")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--residues", type=int, nargs="*", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_period_scan)

    p = sub.add_parser("verify-tables", help="verify the denominator table, bound chain and period table")
    p.add_argument("--scope", choices=["delta", "bounds", "final", "all"], default="all")
    p.add_argument("--t-max", type=int, default=40, dest="t_max")
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--classes-12", type=int, default=3, dest="classes_12")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterNotCoveredError as exc:
        print(json.dumps({"schema": SCHEMA, "status": "not-covered", "error": str(exc)}, indent=2))
        return EXIT_NOT_COVERED


if __name__ == "__main__":
    sys.exit(main())
