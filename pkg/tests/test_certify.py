import json
from fractions import Fraction

import pytest

from helpers import load_fixture
from lodehn.certify import (
    Verdict,
    admissible_modulus,
    analyze_roots,
    certify,
    check_rigidity,
    meridian_trace_check,
    verdict_from,
)
from lodehn.polynomials import Poly, sturm_count
from lodehn.quotient import ModulusBranch
from lodehn.twobridge import TwoBridgeFraction, family_fraction

DELTA1 = Poly([1, -7, 13, -7, 1])


def test_analyze_roots_k1():
    analysis = analyze_roots(DELTA1)
    assert analysis.simple_positive_roots == 4
    assert not analysis.one_is_root
    assert len(analysis.intervals) == 4


def test_analyze_roots_trefoil():
    analysis = analyze_roots(Poly([1, -1, 1]))
    assert analysis.simple_positive_roots == 0
    assert analysis.intervals == ()


def test_analyze_roots_with_multiplicities():
    p = Poly([-2, 1]) ** 2 * Poly([-3, 1])
    analysis = analyze_roots(p)
    assert analysis.simple_positive_roots == 1
    assert sorted(m for _, m in analysis.factors) == [1, 2]


def test_analyze_roots_rejects_zero_constant():
    with pytest.raises(ValueError):
        analyze_roots(Poly([0, 1]))


def test_admissible_modulus_strips_unit_roots():
    assert admissible_modulus(Poly([-1, 1])) is None
    assert admissible_modulus(Poly([1, -3, 1])) == Poly([1, 0, -3, 0, 1])


def test_check_rigidity_k1():
    reports = check_rigidity(
        TwoBridgeFraction(29, 17), ModulusBranch(DELTA1.inflate(2)), DELTA1, 1
    )
    assert len(reports) >= 1
    for report in reports:
        knot, filled = report.dims_knot, report.dims_filled
        assert (knot.z1, knot.b1, knot.h0, knot.h1) == (4, 3, 0, 1)
        assert (filled.z1, filled.b1, filled.h0, filled.h1) == (3, 3, 0, 0)
        assert report.rigid
        assert not report.contains_pm1
        assert all(report.trace_checks)


@pytest.mark.parametrize("j", [2, 3])
def test_check_rigidity_family(j):
    fraction = family_fraction(j)
    delta = Poly([j, -(6 * j + 1), 10 * j + 3, -(6 * j + 1), j])
    branch = ModulusBranch(admissible_modulus(delta))
    for report in check_rigidity(fraction, branch, delta, 1):
        assert report.rigid
        assert report.dims_knot.h1 == 1


def test_check_rigidity_locates_factor_when_not_given():
    reports = check_rigidity(
        TwoBridgeFraction(29, 17), ModulusBranch(DELTA1.inflate(2))
    )
    assert reports[0].xi_factor == DELTA1
    assert reports[0].multiplicity == 1


def test_figure_eight_matches_independent_oracle():
    fixture = load_fixture("figure_eight_dims.json")
    fraction = TwoBridgeFraction(5, 2)
    delta = Poly(fixture["alexander"])
    assert certify(fraction).alexander == delta
    branch = ModulusBranch(admissible_modulus(delta))
    reports = check_rigidity(fraction, branch, delta, 1)
    # the oracle dims agree at every root, so each leaf (whatever the
    # split pattern) must carry exactly those dimensions
    for report in reports:
        knot, filled = report.dims_knot, report.dims_filled
        for expected in fixture["roots"].values():
            assert (knot.z1, knot.b1, knot.h0, knot.h1) == (
                expected["knot"]["z1"], expected["knot"]["b1"],
                expected["knot"]["h0"], expected["knot"]["h1"],
            )
            assert (filled.z1, filled.b1, filled.h0, filled.h1) == (
                expected["filled"]["z1"], expected["filled"]["b1"],
                expected["filled"]["h0"], expected["filled"]["h1"],
            )


def test_meridian_trace_check_k1():
    branch = ModulusBranch(DELTA1.inflate(2))
    assert meridian_trace_check(branch) == (True,) * 8


def test_meridian_trace_check_figure_eight():
    branch = ModulusBranch(Poly([1, 0, -3, 0, 1]))
    assert meridian_trace_check(branch) == (True,) * 4


def test_meridian_trace_check_rejects_unit_roots():
    with pytest.raises(ValueError):
        meridian_trace_check(ModulusBranch(Poly([-1, 0, 1])))
    with pytest.raises(ValueError):
        meridian_trace_check(ModulusBranch(Poly([0, 1, 1])))


def test_certify_k1():
    result = certify(TwoBridgeFraction(29, 17))
    cert = result.certificate
    assert cert.verdict is Verdict.APPLIES
    assert cert.qualifying_roots == 4
    assert cert.all_qualifying_rigid
    assert cert.assumptions[0]["name"] == "exterior_irreducible"
    assert cert.assumptions[0]["holds"] is True


def test_certify_trefoil_no_root():
    result = certify(TwoBridgeFraction(3, 1))
    assert result.certificate.verdict is Verdict.INAPPLICABLE_NO_ROOT
    assert result.certificate.qualifying_roots == 0


def test_invalid_even_fraction_rejected():
    with pytest.raises(ValueError):
        TwoBridgeFraction(4, 1)


def test_certify_figure_eight():
    result = certify(TwoBridgeFraction(5, 2))
    assert result.certificate.verdict is Verdict.APPLIES
    assert result.certificate.qualifying_roots == 2


def test_certify_torus_knot():
    # (9, 1) is the (2,9) torus knot: all roots on the unit circle
    result = certify(TwoBridgeFraction(9, 1))
    assert result.certificate.verdict is Verdict.INAPPLICABLE_NO_ROOT
    product = Poly([1])
    for factor, mult in result.analysis.factors:
        product = product * factor**mult
    assert product == result.alexander.monic()


def test_certify_with_repeated_alexander_factor():
    # Delta(49/17) = (2 tau^2 - 3 tau + 2)^2
    result = certify(TwoBridgeFraction(49, 17))
    assert result.alexander == Poly([4, -12, 17, -12, 4])
    assert [mult for _, mult in result.analysis.factors] == [2]
    assert result.certificate.qualifying_roots == 0
    assert result.certificate.verdict is Verdict.INAPPLICABLE_NO_ROOT
    assert all(report.multiplicity == 2 for report in result.reports)
    assert result.reports  # rigidity is still computed and reported


def test_branch_completeness_rebuilds_alexander():
    for fraction in (TwoBridgeFraction(29, 17), TwoBridgeFraction(9, 1)):
        result = certify(fraction)
        product = Poly([1])
        for factor, mult in result.analysis.factors:
            product = product * factor**mult
        assert product == result.alexander.monic()
        for report in result.reports:
            leaf_product = report.modulus
            # every leaf modulus divides its factor lifted to t^2
            lifted = report.xi_factor.monic().inflate(2)
            assert (lifted % leaf_product).is_zero


def test_certify_mixed_multiplicity_knot():
    # Delta(147/53) = (tau^2 - tau + 1)(2 tau^2 - 3 tau + 2)^2: two
    # branches, no real roots, and the repeated factor is not rigid
    result = certify(TwoBridgeFraction(147, 53))
    assert result.alexander == Poly([4, -16, 33, -41, 33, -16, 4])
    assert result.certificate.verdict is Verdict.INAPPLICABLE_NO_ROOT
    by_mult = {r.multiplicity: r for r in result.reports}
    assert set(by_mult) == {1, 2}
    assert by_mult[1].rigid and by_mult[1].dims_filled.h1 == 0
    assert not by_mult[2].rigid and by_mult[2].dims_filled.h1 == 1
    assert all(r.dims_knot.h1 == 1 for r in result.reports)

    # back the non-rigid dims with the floating oracle at every root
    from helpers import numeric_roots, system_numeric_rank_at
    from lodehn.certify import admissible_modulus
    from lodehn.cohomology import relator_system
    from lodehn.reps import burde_de_rham_assignment
    from lodehn.twobridge import build_presentation

    pres = build_presentation(TwoBridgeFraction(147, 53))
    for report in result.reports:
        branch = ModulusBranch(report.modulus)
        rep = burde_de_rham_assignment(branch, pres.relator)
        for relators, dims in (
            ([pres.relator], report.dims_knot),
            ([pres.relator, pres.longitude], report.dims_filled),
        ):
            system = relator_system(relators, rep)
            exact_rank = 6 - dims.z1
            for root in numeric_roots(report.modulus):
                assert system_numeric_rank_at(system, root) == exact_rank


def test_verdict_assembly():
    assert verdict_from(0, False) is Verdict.INAPPLICABLE_NO_ROOT
    assert verdict_from(0, True) is Verdict.INAPPLICABLE_NO_ROOT
    assert verdict_from(2, False) is Verdict.INAPPLICABLE_NOT_RIGID
    assert verdict_from(2, True) is Verdict.APPLIES
    # adding non-qualifying roots never changes the verdict
    for qualifying in (1, 2, 3):
        assert verdict_from(qualifying, True) is verdict_from(qualifying + 1, True)


@pytest.mark.parametrize(
    "fraction",
    [TwoBridgeFraction(29, 17), TwoBridgeFraction(53, 31), TwoBridgeFraction(5, 2)],
)
def test_reciprocal_root_pairing(fraction):
    result = certify(fraction)
    delta = result.alexander
    inside = sturm_count(delta, (Fraction(0), Fraction(1)))
    outside = sturm_count(delta, (Fraction(1), None))
    assert inside == outside
    coeffs = result.alexander.coeffs
    assert coeffs == tuple(reversed(coeffs))


def test_certify_deterministic():
    from lodehn.cli import build_report, canonical_report

    first = certify(TwoBridgeFraction(29, 17))
    second = certify(TwoBridgeFraction(29, 17))
    echo = {"mode": "pq", "value": "29/17", "fraction": "29/17"}
    a = json.dumps(canonical_report(build_report(first, echo)), sort_keys=False)
    b = json.dumps(canonical_report(build_report(second, echo)), sort_keys=False)
    assert a == b


def test_certify_threads_matches_sequential():
    from lodehn.cli import build_report, canonical_report

    echo = {"mode": "pq", "value": "9/1", "fraction": "9/1"}
    seq = build_report(certify(TwoBridgeFraction(9, 1), threads=1), echo)
    par = build_report(certify(TwoBridgeFraction(9, 1), threads=4), echo)
    assert canonical_report(seq) == canonical_report(par)
