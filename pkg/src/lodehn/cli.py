"""Command-line interface and report serialization.

Exit codes: 0 when the certificate verdict is APPLIES (or a
non-certifying command succeeds), 1 when the criterion is inapplicable
or a self-check fails, 2 on invalid input or an internal cross-check
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .certify import CertifyResult, Verdict, certify, check_rigidity, admissible_modulus
from .cohomology import ClosedFormMismatch, family_cocycle_forms, vanishing_identity
from .polynomials import (
    Poly,
    isolate_real_roots,
    refine_isolating_interval,
    squarefree_decomposition,
    sturm_count,
)
from .quotient import ModulusBranch
from .reps import AlexanderMismatch, alexander_via_fox, alexander_via_rep
from .twobridge import (
    TwoBridgeFraction,
    build_presentation,
    cf_to_fraction,
    family_fraction,
    family_v,
    family_word,
    parity_period_holds,
)

SCHEMA_VERSION = "1"


def _frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _poly_ints(p: Poly) -> List[int]:
    prim = p.primitive()
    return [int(c) for c in prim.coeffs]


def _poly_fracs(p: Poly) -> List[str]:
    return [_frac_str(c) for c in p.coeffs]


def _interval_json(interval: Tuple[Fraction, Fraction]) -> List[str]:
    lo, hi = interval
    return [_frac_str(lo), _frac_str(hi)]


def _dims_json(dims) -> Dict[str, int]:
    return {"z1": dims.z1, "b1": dims.b1, "h0": dims.h0, "h1": dims.h1}


def build_report(
    result: CertifyResult, input_echo: Dict, timings: Optional[Dict] = None
) -> Dict:
    pres = build_presentation(result.fraction)
    branches = []
    for report in result.reports:
        branches.append({
            "modulus": _poly_fracs(report.modulus),
            "xi_factor": _poly_ints(report.xi_factor),
            "multiplicity": report.multiplicity,
            "real_root_intervals": [
                _interval_json(iv) for iv in report.real_root_intervals
            ],
            "contains_pm1": report.contains_pm1,
            "dims_knot": _dims_json(report.dims_knot),
            "dims_filled": _dims_json(report.dims_filled),
            "rigid": report.rigid,
            "trace_checks": list(report.trace_checks),
            "lineage": [
                {
                    "parent": _poly_fracs(rec.parent),
                    "factor": _poly_fracs(rec.factor),
                    "cofactor": _poly_fracs(rec.cofactor),
                }
                for rec in report.lineage
            ],
        })
    certificate = {
        "fraction": str(result.fraction),
        "alexander": _poly_ints(result.alexander),
        "qualifying_roots": result.certificate.qualifying_roots,
        "all_qualifying_rigid": result.certificate.all_qualifying_rigid,
        "verdict": result.certificate.verdict.value,
        "assumptions": [dict(a) for a in result.certificate.assumptions],
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "input": input_echo,
        "presentation": {
            "w": str(pres.w),
            "v": str(pres.v),
            "relator": str(pres.relator),
            "longitude": str(pres.longitude),
            "meridian": str(pres.meridian),
        },
        "alexander": _poly_ints(result.alexander),
        "factors": [
            {"coefficients": _poly_ints(factor), "multiplicity": mult}
            for factor, mult in result.analysis.factors
        ],
        "branches": branches,
        "certificate": certificate,
        "timings": timings or {},
    }


def canonical_report(report: Dict) -> Dict:
    """The report with volatile fields (timings) dropped, for equality
    checks between runs."""
    return {k: v for k, v in report.items() if k != "timings"}


def decimal_string(value: Fraction, digits: int) -> str:
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _parse_pq(text: str) -> TwoBridgeFraction:
    parts = text.split("/")
    if len(parts) != 2:
        raise ValueError(f"expected p/q, got {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected integers in p/q, got {text!r}") from None
    return TwoBridgeFraction(p, q)


def _parse_cf(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _resolve_fraction(args) -> Tuple[TwoBridgeFraction, Dict]:
    if args.cf is not None:
        terms = _parse_cf(args.cf)
        fraction = cf_to_fraction(terms)
        echo = {"mode": "cf", "value": terms, "fraction": str(fraction)}
    elif args.pq is not None:
        fraction = _parse_pq(args.pq)
        echo = {"mode": "pq", "value": args.pq, "fraction": str(fraction)}
    else:
        j = args.family_j
        fraction = family_fraction(j)
        echo = {"mode": "family_j", "value": j, "fraction": str(fraction)}
    return fraction, echo


def _add_selector(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--cf", help="continued fraction, comma-separated integers")
    group.add_argument("--pq", help="two-bridge fraction as p/q")
    group.add_argument("--family-j", type=int,
                       help="index j of the [1,1,2,2,2j] family")


def cmd_certify(args) -> int:
    fraction, echo = _resolve_fraction(args)
    started = time.monotonic()
    result = certify(fraction, threads=args.threads)
    elapsed = time.monotonic() - started
    report = build_report(result, echo, {"total_seconds": elapsed})
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2)
            handle.write("\n")
    if not args.quiet:
        _print_certify_summary(result)
    return 0 if result.certificate.verdict is Verdict.APPLIES else 1


def _print_certify_summary(result: CertifyResult) -> None:
    cert = result.certificate
    print(f"knot {result.fraction}")
    print(f"alexander: {' '.join(str(c) for c in _poly_ints(result.alexander))}")
    print(
        f"simple positive real roots != 1: {cert.qualifying_roots}"
        f"  (value at 1: {result.alexander(1)})"
    )
    for report in result.reports:
        if report.modulus.is_integral():
            mod = " ".join(str(int(c)) for c in report.modulus.coeffs)
        else:
            mod = " ".join(_poly_fracs(report.modulus))
        print(
            f"branch [{mod}]: H1(knot) = {report.dims_knot.h1}, "
            f"H1(filled) = {report.dims_filled.h1}, "
            f"{'rigid' if report.rigid else 'not rigid'}, "
            f"real roots: {len(report.real_root_intervals)}"
        )
    print(f"verdict: {cert.verdict.value}")


def cmd_alexander(args) -> int:
    fraction, _ = _resolve_fraction(args)
    delta = alexander_via_rep(fraction)
    if delta != alexander_via_fox(fraction):
        raise AlexanderMismatch("the two Alexander routes disagree")
    print(" ".join(str(c) for c in _poly_ints(delta)))
    if args.roots:
        for line in _root_lines(delta, args.digits):
            print(line)
    return 0


def _root_lines(delta: Poly, digits: int) -> List[str]:
    entries = []
    for factor, multiplicity in squarefree_decomposition(delta):
        width = Fraction(1, 10 ** (digits + 2))
        for lo, hi in isolate_real_roots(factor):
            lo, hi = refine_isolating_interval(factor, lo, hi, width)
            entries.append((lo, hi, multiplicity, factor))
    entries.sort(key=lambda e: e[0])
    lines = []
    for lo, hi, multiplicity, factor in entries:
        mid = (lo + hi) / 2
        kind = "positive" if lo >= 0 else "negative"
        if factor(1) == 0 and lo < 1 < hi:
            kind = "equal to 1"
        lines.append(
            f"root in ({_frac_str(lo)}, {_frac_str(hi)})"
            f" ~ {decimal_string(mid, digits)}"
            f"  {kind}, multiplicity {multiplicity}"
        )
    return lines


def _expected_family_alexander(j: int) -> Poly:
    return Poly([j, -(6 * j + 1), 10 * j + 3, -(6 * j + 1), j])


def _check_words(j: int) -> bool:
    pres = build_presentation(family_fraction(j))
    return (
        family_word(j) == pres.w
        and family_v(j) == pres.v
        and pres.v == pres.w.spelled_backwards()
        and parity_period_holds(j)
        and pres.longitude.exponent_sum("x") == 0
        and pres.longitude.exponent_sum("y") == 0
    )


def _check_alexander(j: int) -> bool:
    expected = _expected_family_alexander(j)
    fraction = family_fraction(j)
    return (
        alexander_via_rep(fraction) == expected
        and alexander_via_fox(fraction) == expected
    )


def _check_roots(j: int) -> bool:
    delta = _expected_family_alexander(j)
    decomposition = squarefree_decomposition(delta)
    return (
        sturm_count(delta, (Fraction(0), Fraction(5))) == 4
        and sturm_count(delta, (Fraction(5), None)) == 0
        and all(mult == 1 for _, mult in decomposition)
        and sum(f.degree for f, _ in decomposition) == 4
        and delta(1) == 1
    )


def _check_cocycle_forms(j: int) -> bool:
    try:
        family_cocycle_forms(j)
        return True
    except ClosedFormMismatch:
        return False


def _check_vanishing_identity(j: int) -> bool:
    try:
        vanishing_identity(j)
        return True
    except ClosedFormMismatch:
        return False


def _check_cohomology(j: int) -> bool:
    fraction = family_fraction(j)
    delta = _expected_family_alexander(j)
    for factor, multiplicity in squarefree_decomposition(delta):
        modulus = admissible_modulus(factor)
        if modulus is None:
            return False
        reports = check_rigidity(
            fraction, ModulusBranch(modulus), factor, multiplicity
        )
        for report in reports:
            knot, filled = report.dims_knot, report.dims_filled
            if (knot.z1, knot.b1, knot.h0, knot.h1) != (4, 3, 0, 1):
                return False
            if filled.h1 != 0 or filled.h0 != 0 or filled.b1 != 3:
                return False
    return True


VERIFY_ITEMS = (
    ("closed word form vs floor formula, with period-24 parity", _check_words),
    ("alexander closed form by both routes", _check_alexander),
    ("four simple positive real roots, value 1 at tau=1", _check_roots),
    ("cocycle closed forms on w, v and the geometric sums", _check_cocycle_forms),
    ("longitude and relator vanishing identities", _check_vanishing_identity),
    ("H1(knot) one-dimensional and H1(filled) zero on all branches",
     _check_cohomology),
)


def cmd_verify_family(args) -> int:
    jmax = args.j_max
    if jmax < 1:
        raise ValueError(f"--j-max must be >= 1, got {jmax}")
    all_ok = True
    for label, checker in VERIFY_ITEMS:
        ok = True
        for j in range(1, jmax + 1):
            if not checker(j):
                ok = False
                break
        all_ok = all_ok and ok
        print(f"{'PASS' if ok else 'FAIL'}  {label} (j=1..{jmax})")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lodehn",
        description=(
            "Exact certificates for intervals of left-orderable Dehn "
            "fillings on two-bridge knot exteriors."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cert = sub.add_parser("certify", help="run the full certificate pipeline")
    _add_selector(p_cert)
    p_cert.add_argument("--json", help="write the JSON report to this path")
    p_cert.add_argument("--quiet", action="store_true",
                        help="suppress the stdout summary")
    p_cert.add_argument("--threads", type=int, default=1,
                        help="parallel branch checks (ordering unchanged)")
    p_cert.set_defaults(func=cmd_certify)

    p_alex = sub.add_parser("alexander", help="print the Alexander polynomial")
    _add_selector(p_alex)
    p_alex.add_argument("--roots", action="store_true",
                        help="also print isolated real roots")
    p_alex.add_argument("--digits", type=int, default=6,
                        help="decimal digits for root approximations")
    p_alex.set_defaults(func=cmd_alexander)

    p_verify = sub.add_parser(
        "verify-family",
        help="re-derive the closed-form identities of the [1,1,2,2,2j] family",
    )
    p_verify.add_argument("--j-max", type=int, default=10,
                          help="largest family index to check")
    p_verify.set_defaults(func=cmd_verify_family)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, AlexanderMismatch) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
