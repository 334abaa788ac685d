"""Certification pipeline for left-orderable Dehn filling intervals.

A two-bridge knot qualifies when its Alexander polynomial has a simple
positive real root other than 1 and the twisted cohomology of the
0-filled group vanishes at the corresponding reducible non-abelian
representation (local longitudinal rigidity).  Everything runs in exact
arithmetic: positive real roots are detected through real roots of the
polynomial evaluated at t^2, and rigidity is decided per branch of the
square-free part of that polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .cohomology import CohomologyDims, cohomology_dims
from .polynomials import (
    Poly,
    isolate_real_roots,
    poly_gcd,
    refine_isolating_interval,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)
from .quotient import ModulusBranch
from .reps import (
    AlexanderMismatch,
    RepAssignment,
    alexander_via_fox,
    alexander_via_rep,
    burde_de_rham_assignment,
)
from .twobridge import TwoBridgeFraction, build_presentation

T_POLY = Poly([0, 1])
T2_MINUS_1 = Poly([-1, 0, 1])


@dataclass(frozen=True)
class RootAnalysis:
    """Square-free factor data and the qualifying-root count of an
    Alexander polynomial."""

    factors: Tuple[Tuple[Poly, int], ...]
    simple_positive_roots: int
    one_is_root: bool
    intervals: Tuple[Tuple[Fraction, Fraction], ...]


def analyze_roots(delta: Poly) -> RootAnalysis:
    """Count simple positive real roots different from 1 and isolate all
    distinct real roots.  The input must be normalized (nonzero constant
    term)."""
    if delta.is_zero:
        raise ValueError("cannot analyze the zero polynomial")
    if delta.constant == 0:
        raise ValueError("expected a normalized polynomial (nonzero constant)")
    factors = tuple(squarefree_decomposition(delta))
    count = 0
    for factor, multiplicity in factors:
        if multiplicity != 1:
            continue
        n = sturm_count(factor, (Fraction(0), None))
        if factor(1) == 0:
            n -= 1
        count += n
    intervals = tuple(isolate_real_roots(squarefree_part(delta)))
    return RootAnalysis(
        factors=factors,
        simple_positive_roots=count,
        one_is_root=(delta(1) == 0),
        intervals=intervals,
    )


@dataclass(frozen=True)
class RootBranchReport:
    """Per-leaf record of the rigidity computation."""

    modulus: Poly
    lineage: Tuple
    xi_factor: Poly
    multiplicity: int
    real_root_intervals: Tuple[Tuple[Fraction, Fraction], ...]
    contains_pm1: bool
    dims_knot: CohomologyDims
    dims_filled: CohomologyDims
    rigid: bool
    trace_checks: Tuple[bool, ...]


def admissible_modulus(xi_factor: Poly) -> Optional[Poly]:
    """Lift a square-free Alexander factor F(tau) to the t-side modulus
    F(t^2), with any t = +-1 part removed.  Returns None when nothing
    of positive degree is left."""
    lifted = xi_factor.monic().inflate(2)
    unit_part = poly_gcd(lifted, T2_MINUS_1)
    if unit_part.degree > 0:
        lifted = lifted // unit_part
    if lifted.degree < 1:
        return None
    if poly_gcd(lifted, T_POLY).degree != 0:
        raise ValueError("factor vanishes at 0; expected a normalized input")
    return lifted.monic()


def meridian_trace_check(
    branch: ModulusBranch,
    intervals: Optional[Sequence[Tuple[Fraction, Fraction]]] = None,
) -> Tuple[bool, ...]:
    """Certify tr^2 = xi + 2 + 1/xi > 4 with xi = t^2 for every real
    root t of the branch modulus, by refining each isolating interval
    until it avoids -1, 0 and 1 so the squared interval misses 1."""
    modulus = branch.modulus
    if poly_gcd(modulus, T2_MINUS_1).degree != 0:
        raise ValueError("branch contains t = +-1; trace check unreachable")
    if poly_gcd(modulus, T_POLY).degree != 0:
        raise ValueError("branch contains t = 0; trace check unreachable")
    if intervals is None:
        intervals = isolate_real_roots(modulus)
    verdicts = []
    for lo, hi in intervals:
        while any(lo < point < hi for point in (-1, 0, 1)):
            lo, hi = refine_isolating_interval(modulus, lo, hi, (hi - lo) / 2)
        if hi <= 0:
            lo, hi = -hi, -lo
        # xi now lies in a positive interval missing 1, so (xi-1)^2 > 0.
        xi_lo, xi_hi = lo * lo, hi * hi
        verdicts.append(xi_hi <= 1 or xi_lo >= 1)
    if not all(verdicts):
        raise AssertionError("trace certification failed on a refined interval")
    return tuple(verdicts)


def check_rigidity(
    fraction: TwoBridgeFraction,
    branch: ModulusBranch,
    xi_factor: Optional[Poly] = None,
    multiplicity: Optional[int] = None,
) -> List[RootBranchReport]:
    """Build the reducible non-abelian representation on the branch and
    compute the twisted cohomology of the knot group and of the 0-filled
    group.  One report per leaf if dynamic evaluation splits."""
    pres = build_presentation(fraction)
    if xi_factor is None or multiplicity is None:
        xi_factor, multiplicity = _locate_factor(fraction, branch)
    rep = burde_de_rham_assignment(branch, pres.relator)
    knot_leaves = cohomology_dims([pres.relator], rep)
    reports: List[RootBranchReport] = []
    for knot_leaf in knot_leaves:
        leaf_branch = knot_leaf.branch if knot_leaf.branch is not None else branch
        leaf_rep = _rep_on(leaf_branch, pres.relator)
        filled_leaves = cohomology_dims([pres.relator, pres.longitude], leaf_rep)
        for filled_leaf in filled_leaves:
            final_branch = (
                filled_leaf.branch if filled_leaf.branch is not None else leaf_branch
            )
            intervals = tuple(isolate_real_roots(final_branch.modulus))
            traces = meridian_trace_check(final_branch, intervals)
            reports.append(
                RootBranchReport(
                    modulus=final_branch.modulus,
                    lineage=final_branch.lineage,
                    xi_factor=xi_factor.primitive(),
                    multiplicity=multiplicity,
                    real_root_intervals=intervals,
                    contains_pm1=(
                        final_branch.modulus(1) == 0
                        or final_branch.modulus(-1) == 0
                    ),
                    dims_knot=knot_leaf.dims,
                    dims_filled=filled_leaf.dims,
                    rigid=(filled_leaf.dims.h1 == 0),
                    trace_checks=traces,
                )
            )
    reports.sort(key=lambda r: (r.modulus.degree, r.modulus.coeffs))
    return reports


def _rep_on(branch: ModulusBranch, relator) -> RepAssignment:
    return burde_de_rham_assignment(branch, relator)


def _locate_factor(
    fraction: TwoBridgeFraction, branch: ModulusBranch
) -> Tuple[Poly, int]:
    delta = alexander_via_rep(fraction)
    for factor, multiplicity in squarefree_decomposition(delta):
        lifted = factor.monic().inflate(2)
        if (lifted % branch.modulus).is_zero:
            return factor, multiplicity
    raise ValueError("branch does not divide any Alexander factor at t^2")


class Verdict(str, Enum):
    APPLIES = "APPLIES"
    INAPPLICABLE_NO_ROOT = "INAPPLICABLE_NO_ROOT"
    INAPPLICABLE_NOT_RIGID = "INAPPLICABLE_NOT_RIGID"


def verdict_from(qualifying_roots: int, any_qualifying_rigid: bool) -> Verdict:
    if qualifying_roots < 1:
        return Verdict.INAPPLICABLE_NO_ROOT
    return Verdict.APPLIES if any_qualifying_rigid else Verdict.INAPPLICABLE_NOT_RIGID


ASSUMPTIONS = (
    {
        "name": "exterior_irreducible",
        "holds": True,
        "note": "two-bridge knot exteriors are irreducible",
    },
)


@dataclass(frozen=True)
class Certificate:
    fraction: TwoBridgeFraction
    alexander: Poly
    qualifying_roots: int
    all_qualifying_rigid: bool
    verdict: Verdict
    assumptions: Tuple = ASSUMPTIONS


@dataclass(frozen=True)
class CertifyResult:
    fraction: TwoBridgeFraction
    alexander: Poly
    analysis: RootAnalysis
    reports: Tuple[RootBranchReport, ...]
    certificate: Certificate


def certify(fraction: TwoBridgeFraction, threads: int = 1) -> CertifyResult:
    """Run the full pipeline: Alexander polynomial by two independent
    routes, root analysis, and per-branch rigidity."""
    delta = alexander_via_rep(fraction)
    delta_fox = alexander_via_fox(fraction)
    if delta != delta_fox:
        raise AlexanderMismatch(
            f"representation route {delta!r} disagrees with "
            f"free-derivative route {delta_fox!r}"
        )
    analysis = analyze_roots(delta)

    jobs = []
    for factor, multiplicity in analysis.factors:
        modulus = admissible_modulus(factor)
        if modulus is None:
            continue
        jobs.append((factor, multiplicity, ModulusBranch(modulus)))

    def run(job) -> List[RootBranchReport]:
        factor, multiplicity, branch = job
        return check_rigidity(fraction, branch, factor, multiplicity)

    if threads > 1 and len(jobs) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(run, jobs))
    else:
        chunks = [run(job) for job in jobs]
    reports: List[RootBranchReport] = [r for chunk in chunks for r in chunk]
    reports.sort(
        key=lambda r: (r.xi_factor.coeffs, r.modulus.degree, r.modulus.coeffs)
    )

    qualifying = analysis.simple_positive_roots
    rigid_leaves = [
        r for r in reports
        if r.multiplicity == 1 and r.real_root_intervals and r.rigid
    ]
    real_leaves = [
        r for r in reports if r.multiplicity == 1 and r.real_root_intervals
    ]
    any_rigid = bool(rigid_leaves) and qualifying > 0
    all_rigid = qualifying > 0 and bool(real_leaves) and all(
        r.rigid for r in real_leaves
    )
    certificate = Certificate(
        fraction=fraction,
        alexander=delta,
        qualifying_roots=qualifying,
        all_qualifying_rigid=all_rigid,
        verdict=verdict_from(qualifying, any_rigid),
    )
    return CertifyResult(
        fraction=fraction,
        alexander=delta,
        analysis=analysis,
        reports=tuple(reports),
        certificate=certificate,
    )
