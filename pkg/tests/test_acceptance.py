"""Acceptance suite: each test enforces one shipping criterion at its
stated tolerance (exact arithmetic throughout) and prints a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the checklist.
"""

import json
import random
import time
from fractions import Fraction

from helpers import (
    load_fixture,
    numeric_roots,
    random_unimodular_laurent,
    random_word,
    system_numeric_rank_at,
)
from lodehn.certify import admissible_modulus, certify, check_rigidity
from lodehn.cli import main
from lodehn.cohomology import (
    CocycleValues,
    coboundary_values,
    eval_cocycle,
    family_cocycle_forms,
    relator_system,
    vanishing_identity,
)
from lodehn.polynomials import LaurentPoly, Poly, squarefree_decomposition, sturm_count
from lodehn.quotient import BranchArithmetic, MatrixOverField, ModulusBranch
from lodehn.reps import (
    adjoint,
    alexander_via_fox,
    alexander_via_rep,
    burde_de_rham_assignment,
    eval_word_matrix,
    meridian_rep_laurent,
)
from lodehn.twobridge import (
    TwoBridgeFraction,
    build_presentation,
    family_fraction,
    family_word,
    parity_period_holds,
)


def _family_delta(j):
    return Poly([j, -(6 * j + 1), 10 * j + 3, -(6 * j + 1), j])


def _report(number, label, started, budget=None):
    elapsed = time.monotonic() - started
    if budget is not None:
        assert elapsed < budget, f"criterion {number} overran {budget}s ({elapsed:.1f}s)"
    print(f"ACCEPTANCE {number}: PASS  {label}  ({elapsed:.1f}s)")


def test_criterion_1_alexander_closed_form_both_routes():
    started = time.monotonic()
    for j in range(1, 51):
        expected = _family_delta(j)
        fraction = family_fraction(j)
        assert alexander_via_rep(fraction) == expected
        assert alexander_via_fox(fraction) == expected
    _report(1, "closed-form Alexander polynomial, two routes, j=1..50",
            started, budget=30)


def test_criterion_2_root_counts():
    started = time.monotonic()
    for j in range(1, 51):
        delta = _family_delta(j)
        assert sturm_count(delta, (Fraction(0), Fraction(5))) == 4
        assert sturm_count(delta, (Fraction(5), None)) == 0
        decomposition = squarefree_decomposition(delta)
        assert all(mult == 1 for _, mult in decomposition)
        assert delta(1) == 1
    _report(2, "four simple positive real roots on (0,5), j=1..50",
            started, budget=10)


def test_criterion_3_closed_word_form():
    started = time.monotonic()
    for j in range(1, 201):
        assert family_word(j) == build_presentation(family_fraction(j)).w
        assert parity_period_holds(j)
    _report(3, "closed word form equals the floor-formula word, j=1..200",
            started, budget=10)


def test_criterion_4_cocycle_closed_forms():
    started = time.monotonic()
    for j in range(1, 21):
        family_cocycle_forms(j)  # raises on any component mismatch
    _report(4, "cocycle closed forms on w, v and geometric sums, j=1..20",
            started, budget=60)


def test_criterion_5_vanishing_identities():
    started = time.monotonic()
    for j in range(1, 21):
        identity = vanishing_identity(j)
        quartic = LaurentPoly.from_terms({4: 1, 2: -4, 0: 1})
        expected = (
            LaurentPoly.from_terms({4: 1, 0: -1})
            * (LaurentPoly.from_terms({4: 1}) + j * quartic * quartic)
        ).shift(-5)
        assert identity == expected
    _report(5, "longitude and relator identities, j=1..20", started)


def test_criterion_6_main_vanishing():
    started = time.monotonic()
    for j in range(1, 21):
        fraction = family_fraction(j)
        delta = _family_delta(j)
        for factor, mult in squarefree_decomposition(delta):
            branch = ModulusBranch(admissible_modulus(factor))
            reports = check_rigidity(fraction, branch, factor, mult)
            assert reports
            for report in reports:
                knot, filled = report.dims_knot, report.dims_filled
                assert (knot.z1, knot.b1, knot.h0, knot.h1) == (4, 3, 0, 1)
                assert filled.h1 == 0 and filled.h0 == 0 and filled.b1 == 3
    _report(6, "H1(knot)=1 and H1(filled)=0 on every branch, j=1..20",
            started, budget=300)


def test_criterion_7_certificates_end_to_end(tmp_path):
    started = time.monotonic()
    for j in range(1, 21):
        out = tmp_path / f"family_{j}.json"
        code = main(["certify", "--family-j", str(j), "--json", str(out),
                     "--quiet"])
        assert code == 0
        assert json.loads(out.read_text())["certificate"]["verdict"] == "APPLIES"
    assert main(["certify", "--pq", "3/1", "--quiet"]) == 1
    trefoil = certify(TwoBridgeFraction(3, 1))
    assert trefoil.certificate.verdict.value == "INAPPLICABLE_NO_ROOT"
    assert main(["certify", "--pq", "4/1", "--quiet"]) == 2
    _report(7, "CLI certificates: family APPLIES, trefoil no-root, link rejected",
            started)


def test_criterion_8_property_suites():
    started = time.monotonic()
    rng = random.Random(20240801)

    # adjoint multiplicativity on 100 random unimodular pairs
    for _ in range(100):
        a = random_unimodular_laurent(rng)
        b = random_unimodular_laurent(rng)
        assert adjoint(a @ b) == adjoint(a) @ adjoint(b)

    # cocycle law on 100 random word pairs
    rep = meridian_rep_laurent()
    checked = 0
    while checked < 100:
        a, b = random_word(rng, 8), random_word(rng, 8)
        if len(a * b) != len(a) + len(b):
            continue
        checked += 1
        z = CocycleValues(
            tuple(LaurentPoly.from_terms({rng.randint(-1, 1): rng.randint(-2, 2)})
                  for _ in range(3)),
            tuple(LaurentPoly.from_terms({rng.randint(-1, 1): rng.randint(-2, 2)})
                  for _ in range(3)),
        )
        ad_a = adjoint(eval_word_matrix(a, rep))
        step = ad_a.apply(eval_cocycle(b, z, rep))
        expected = tuple(eval_cocycle(a, z, rep)[i] + step[i] for i in range(3))
        assert eval_cocycle(a * b, z, rep) == expected

    # coboundaries lie in every constructed cocycle space, and exact
    # ranks agree with high-precision floating elimination at the
    # isolated roots, for K1 and K2
    for j in (1, 2):
        fraction = family_fraction(j)
        pres = build_presentation(fraction)
        branch = ModulusBranch(_family_delta(j).monic().inflate(2))
        branch_rep = burde_de_rham_assignment(branch, pres.relator)
        for relators in ([pres.relator], [pres.relator, pres.longitude]):
            system = relator_system(relators, branch_rep)
            for k in range(3):
                unit = [1 if i == k else 0 for i in range(3)]
                cb = coboundary_values(unit, branch_rep)
                image = system.apply(list(cb.z_x) + list(cb.z_y))
                assert all(entry.is_zero for entry in image)
            exact_ranks = {res.rank for res in system.nullspace()}
            assert len(exact_ranks) == 1
            exact_rank = exact_ranks.pop()
            for root in numeric_roots(branch.modulus):
                assert system_numeric_rank_at(system, root) == exact_rank

    # reciprocal symmetry of every computed Alexander polynomial
    fractions = [family_fraction(j) for j in range(1, 6)]
    fractions += [TwoBridgeFraction(5, 2), TwoBridgeFraction(7, 3),
                  TwoBridgeFraction(9, 1), TwoBridgeFraction(13, 5)]
    for fraction in fractions:
        delta = alexander_via_rep(fraction)
        assert delta.coeffs == tuple(reversed(delta.coeffs))

    # branch conservation under forced splits, with kernel certificates
    modulus = Poly([1])
    for root in (0, 1, 2, 5):
        modulus = modulus * Poly([-root, 1])
    branch = ModulusBranch(modulus)
    t = branch.t()
    rows = [[t - 1, branch.element(0)], [branch.element(0), t * (t - 5)]]
    results = MatrixOverField(rows, BranchArithmetic(branch)).nullspace()
    product = Poly([1])
    for res in results:
        product = product * res.branch.modulus
        sub = MatrixOverField(
            [[e.reduce_to(res.branch) for e in row] for row in rows],
            BranchArithmetic(res.branch),
        )
        for vec in res.basis:
            assert all(v.is_zero for v in sub.apply(vec))
    assert product == modulus
    assert len(results) >= 2

    _report(8, "property suites: adjoint, cocycle law, B1 in Z1, "
               "reciprocity, splitting, float-rank agreement", started)


def test_criterion_9_cross_knot_oracles():
    started = time.monotonic()
    fig8 = TwoBridgeFraction(5, 2)
    trefoil = TwoBridgeFraction(3, 1)
    assert alexander_via_rep(fig8) == Poly([1, -3, 1])
    assert alexander_via_fox(fig8) == Poly([1, -3, 1])
    assert alexander_via_rep(trefoil) == Poly([1, -1, 1])
    assert alexander_via_fox(trefoil) == Poly([1, -1, 1])

    fixture = load_fixture("figure_eight_dims.json")
    delta = Poly(fixture["alexander"])
    branch = ModulusBranch(admissible_modulus(delta))
    reports = check_rigidity(fig8, branch, delta, 1)
    assert reports
    for report in reports:
        knot, filled = report.dims_knot, report.dims_filled
        for expected in fixture["roots"].values():
            assert (knot.z1, knot.b1, knot.h0, knot.h1) == tuple(
                expected["knot"][k] for k in ("z1", "b1", "h0", "h1")
            )
            assert (filled.z1, filled.b1, filled.h0, filled.h1) == tuple(
                expected["filled"][k] for k in ("z1", "b1", "h0", "h1")
            )
    _report(9, "figure-eight and trefoil against independent oracles", started)
