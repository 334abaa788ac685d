"""Twisted sl2 group cohomology for two-generator presentations.

A cocycle is determined by its values on the generators; it extends
along a word by z(gh) = z(g) + g.z(h) with g acting through the adjoint
of the representation, and z(g^-1) = -Ad(g^-1) z(g).  A value pair is a
genuine cocycle of a presented group exactly when it kills every
relator, which turns cocycle spaces into nullspaces of explicit linear
systems (one 3x6 block per relator, columns ordered z(x) then z(y)).

Coboundaries are the value pairs ((Ad x - 1) V, (Ad y - 1) V); their
span has dimension 3 - dim H^0, so

    dim H^1 = dim Z^1 - (3 - dim H^0).

The closed forms of the family cocycle values and the two vanishing
identities they satisfy are exposed at the end of the module; they are
rechecked symbolically over Q[t, t^-1] on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .polynomials import LaurentPoly
from .quotient import (
    BranchArithmetic,
    MatrixOverField,
    ModulusBranch,
    RationalArithmetic,
)
from .reps import (
    Mat3,
    QuotientRing,
    RationalRing,
    RepAssignment,
    adjoint,
    eval_word_matrix,
    f_upper_entry,
    meridian_rep_laurent,
)
from .twobridge import FAMILY_S, FAMILY_U, family_v, family_word
from .words import Word


@dataclass(frozen=True)
class CocycleValues:
    """Values on x and y, coordinates in the basis v+, v0, v-."""

    z_x: Tuple
    z_y: Tuple

    def value(self, gen: str) -> Tuple:
        return self.z_x if gen == "x" else self.z_y


def eval_cocycle(word: Word, z: CocycleValues, rep: RepAssignment) -> Tuple:
    """Extend the generator values along ``word`` by the cocycle law."""
    val = (rep.ring.zero,) * 3
    acc = Mat3.identity()
    for gen, sign in word:
        zg = z.value(gen)
        if sign > 0:
            step = acc.apply(zg)
            val = tuple(val[i] + step[i] for i in range(3))
            acc = acc @ rep.ad(gen, 1)
        else:
            acc = acc @ rep.ad(gen, -1)
            step = acc.apply(zg)
            val = tuple(val[i] - step[i] for i in range(3))
    return tuple(rep.ring.coerce(v) for v in val)


def word_value_blocks(word: Word, rep: RepAssignment) -> Tuple[Mat3, Mat3]:
    """The pair (Mx, My) with z(word) = Mx z(x) + My z(y) for every
    value assignment z.  Single pass over the word."""
    mx = Mat3.zero()
    my = Mat3.zero()
    acc = Mat3.identity()
    for gen, sign in word:
        if sign > 0:
            if gen == "x":
                mx = mx + acc
            else:
                my = my + acc
            acc = acc @ rep.ad(gen, 1)
        else:
            acc = acc @ rep.ad(gen, -1)
            if gen == "x":
                mx = mx - acc
            else:
                my = my - acc
    return mx, my


def _arithmetic_for(rep: RepAssignment):
    if isinstance(rep.ring, QuotientRing):
        return BranchArithmetic(rep.ring.branch)
    if isinstance(rep.ring, RationalRing):
        return RationalArithmetic()
    raise TypeError("linear algebra needs rational or quotient-ring coefficients")


def relator_system(relators: Sequence[Word], rep: RepAssignment) -> MatrixOverField:
    """Stacked 3x6 blocks, one per relator; the nullspace is the space
    of cocycle value pairs of the presented group."""
    rows = relator_system_rows(relators, rep)
    return MatrixOverField(rows, _arithmetic_for(rep))


def relator_system_rows(relators: Sequence[Word], rep: RepAssignment) -> List[List]:
    rows: List[List] = []
    for relator in relators:
        mx, my = word_value_blocks(relator, rep)
        for i in range(3):
            rows.append(list(mx.rows[i]) + list(my.rows[i]))
    return rows


def coboundary_values(v: Sequence, rep: RepAssignment) -> CocycleValues:
    """The coboundary of V: gamma -> (Ad gamma - 1) V on the generators."""
    ad_x, ad_y = rep.ad("x", 1), rep.ad("y", 1)
    dx = tuple(ad_x.apply(v)[i] - v[i] for i in range(3))
    dy = tuple(ad_y.apply(v)[i] - v[i] for i in range(3))
    return CocycleValues(dx, dy)


def _fixed_space_rows(rep: RepAssignment) -> List[List]:
    rows = []
    for ad in (rep.ad("x", 1), rep.ad("y", 1)):
        for i in range(3):
            rows.append(
                [ad.rows[i][j] - (1 if i == j else 0) for j in range(3)]
            )
    return rows


@dataclass(frozen=True)
class CohomologyDims:
    z1: int
    b1: int
    h0: int
    h1: int


@dataclass
class BranchCohomology:
    branch: Optional[ModulusBranch]
    dims: CohomologyDims
    cocycle_basis: List[Tuple]


def cohomology_dims(
    relators: Sequence[Word], rep: RepAssignment
) -> List[BranchCohomology]:
    """Dimensions of Z^1, B^1, H^0 and H^1 for the presentation with the
    given relators, one record per leaf branch.

    Every coboundary is checked to lie in the computed cocycle space;
    a failure would falsify the linear systems and raises.
    """
    arith = _arithmetic_for(rep)
    sys_rows = relator_system_rows(relators, rep)
    results: List[BranchCohomology] = []
    if sys_rows:
        z1_leaves = MatrixOverField(sys_rows, arith).nullspace()
    else:
        z1_leaves = MatrixOverField([[arith.zero] * 6], arith).nullspace()
    for z1_leaf in z1_leaves:
        if z1_leaf.branch is None:
            leaf_arith = arith
        else:
            leaf_arith = BranchArithmetic(z1_leaf.branch)
        fixed_rows = [
            [leaf_arith.coerce(e) for e in row] for row in _fixed_space_rows(rep)
        ]
        for h0_leaf in MatrixOverField(fixed_rows, leaf_arith).nullspace():
            h0 = h0_leaf.dim
            dims = CohomologyDims(
                z1=z1_leaf.dim, b1=3 - h0, h0=h0, h1=z1_leaf.dim - (3 - h0)
            )
            final_arith = (
                BranchArithmetic(h0_leaf.branch)
                if h0_leaf.branch is not None
                else arith
            )
            _check_coboundaries_are_cocycles(sys_rows, rep, final_arith)
            basis = [
                tuple(final_arith.coerce(c) for c in vec)
                for vec in z1_leaf.basis
            ]
            results.append(BranchCohomology(h0_leaf.branch, dims, basis))
    return results


def _check_coboundaries_are_cocycles(sys_rows, rep, arith) -> None:
    if not sys_rows:
        return
    matrix = MatrixOverField(
        [[arith.coerce(e) for e in row] for row in sys_rows], arith
    )
    for k in range(3):
        unit = [1 if i == k else 0 for i in range(3)]
        cb = coboundary_values(unit, rep)
        image = matrix.apply(list(cb.z_x) + list(cb.z_y))
        if any(not arith.is_zero(entry) for entry in image):
            raise AssertionError("a coboundary escaped the cocycle space")


def normalized_representative(
    z: CocycleValues, rep: RepAssignment
) -> CocycleValues:
    """Correct z by a coboundary so that z(x) = (0, a, b) and
    z(y) = (0, d, 0).

    Needs t^2 != 1, which makes the three coboundary parameters
    solvable.  For a cocycle of a knot relator the corrected values
    satisfy d = a; callers verify that rather than assume it.
    """
    if not isinstance(rep.ring, QuotientRing):
        raise TypeError("normalization needs quotient-ring coefficients")
    branch = rep.ring.branch
    t = branch.t()
    tinv = t.inverse()
    t2m1 = t * t - 1
    if t2m1.is_zero:
        raise ValueError("t^2 = 1 is rejected")
    tinv2m1 = tinv * tinv - 1
    a = z.z_x[0] * t2m1.inverse()
    c = z.z_y[2] * tinv2m1.inverse()
    b = (t2m1 * a - c - z.z_y[0]) * (2 * t).inverse()
    dx = (t2m1 * a, branch.element(0), tinv2m1 * c)
    dy = (t2m1 * a - 2 * t * b - c, tinv * c, tinv2m1 * c)
    out = CocycleValues(
        tuple(rep.ring.coerce(z.z_x[i]) - dx[i] for i in range(3)),
        tuple(rep.ring.coerce(z.z_y[i]) - dy[i] for i in range(3)),
    )
    if not (out.z_x[0].is_zero and out.z_y[0].is_zero and out.z_y[2].is_zero):
        raise AssertionError("coboundary correction failed to normalize")
    return out


class ClosedFormMismatch(RuntimeError):
    """A symbolic evaluation disagrees with an expected closed form."""


@dataclass(frozen=True)
class FamilyCocycleForms:
    """Closed forms of the family's cocycle values z(w) and z(v) for the
    normalized values z(x) = (0, alpha, beta), z(y) = (0, alpha, 0).

    The v+ coordinates carry unspecified beta multiples; those are
    returned computed-only (``h_beta``, ``nu1_alpha``, ``nu1_beta``) and
    never asserted.
    """

    omega1_alpha: LaurentPoly
    omega2_beta: LaurentPoly
    omega3_beta: LaurentPoly
    nu2_beta: LaurentPoly
    nu3_beta: LaurentPoly
    sum_u: Mat3
    sum_s: Mat3
    h_beta: LaurentPoly
    nu1_alpha: LaurentPoly
    nu1_beta: LaurentPoly


def _geometric_sum(m: Mat3, count: int) -> Mat3:
    acc = Mat3.zero()
    power = Mat3.identity()
    for _ in range(count):
        acc = acc + power
        power = power @ m
    return acc


def _half(n: int) -> Fraction:
    return Fraction(n, 2)


def _family_closed_forms(j: int):
    L = LaurentPoly.from_terms
    omega1_alpha = L({3: -4 * j, 1: 10 * j + 2, -3: -2 * j})
    omega2_beta = L({
        7: _half(j * (j + 1)),
        5: -5 * j * (j + 1),
        3: _half(35 * j * j + 31 * j + 2),
        1: -_half(52 * j * j + 28 * j + 4),
        -1: _half(j * (35 * j - 3)),
        -3: -_half(j * (10 * j - 6)),
        -5: _half(j * (j - 1)),
    })
    nu2_beta = L({
        7: _half(j * (j + 1)),
        5: -5 * j * (j + 1),
        3: _half(35 * j * j + 27 * j + 2),
        1: -_half(52 * j * j + 12 * j),
        -1: _half(j * (35 * j - 7)),
        -3: -_half(j * (10 * j - 6)),
        -5: _half(j * (j - 1)),
    })
    f = f_upper_entry(j)
    omega3_beta = LaurentPoly.monomial(1) * f
    nu3_beta = -omega3_beta
    g = L({3: 1, 1: -5, -1: 5, -3: -1})
    c12 = (j * j - j) * g
    c13 = -Fraction(2 * j**3 - 3 * j * j + j, 6) * (g * g)
    c23 = -Fraction(j * j - j, 2) * g
    sum_u = Mat3(((j, c12, c13), (0, j, c23), (0, 0, j)))
    sum_s = Mat3(((j, -c12, c13), (0, j, -c23), (0, 0, j)))
    return omega1_alpha, omega2_beta, nu2_beta, omega3_beta, nu3_beta, sum_u, sum_s


def family_cocycle_forms(j: int) -> FamilyCocycleForms:
    """Closed forms for z(w), z(v) and the two geometric-sum matrices of
    the family, each verified against a direct symbolic cocycle
    evaluation over Q[t, t^-1]."""
    if j < 1:
        raise ValueError(f"family index must be >= 1, got {j}")
    (omega1_alpha, omega2_beta, nu2_beta, omega3_beta, nu3_beta,
     sum_u, sum_s) = _family_closed_forms(j)

    rep = meridian_rep_laurent()
    ring = rep.ring
    zero, one = ring.zero, ring.one
    z_alpha = CocycleValues((zero, one, zero), (zero, one, zero))
    z_beta = CocycleValues((zero, zero, one), (zero, zero, zero))
    w, v = family_word(j), family_v(j)
    ew_alpha = eval_cocycle(w, z_alpha, rep)
    ew_beta = eval_cocycle(w, z_beta, rep)
    ev_alpha = eval_cocycle(v, z_alpha, rep)
    ev_beta = eval_cocycle(v, z_beta, rep)

    checks = [
        ("z(w) v+ alpha part", ew_alpha[0], omega1_alpha),
        ("z(w) v0 alpha part", ew_alpha[1], ring.zero),
        ("z(w) v- alpha part", ew_alpha[2], ring.zero),
        ("z(w) v0 beta part", ew_beta[1], omega2_beta),
        ("z(w) v- beta part", ew_beta[2], omega3_beta),
        ("z(v) v0 alpha part", ev_alpha[1], ring.zero),
        ("z(v) v- alpha part", ev_alpha[2], ring.zero),
        ("z(v) v0 beta part", ev_beta[1], nu2_beta),
        ("z(v) v- beta part", ev_beta[2], nu3_beta),
    ]
    for label, computed, closed in checks:
        if computed != closed:
            raise ClosedFormMismatch(
                f"{label} disagrees at j={j}: {computed!r} != {closed!r}"
            )
    ad_u = adjoint(eval_word_matrix(FAMILY_U, rep))
    ad_s = adjoint(eval_word_matrix(FAMILY_S, rep))
    if _geometric_sum(ad_u, j) != sum_u:
        raise ClosedFormMismatch(f"geometric sum over u disagrees at j={j}")
    if _geometric_sum(ad_s, j) != sum_s:
        raise ClosedFormMismatch(f"geometric sum over s disagrees at j={j}")

    return FamilyCocycleForms(
        omega1_alpha=omega1_alpha,
        omega2_beta=omega2_beta,
        omega3_beta=omega3_beta,
        nu2_beta=nu2_beta,
        nu3_beta=nu3_beta,
        sum_u=sum_u,
        sum_s=sum_s,
        h_beta=ew_beta[0],
        nu1_alpha=ev_alpha[0],
        nu1_beta=ev_beta[0],
    )


def vanishing_identity(j: int) -> LaurentPoly:
    """The two scalar identities behind H^1(filled) = 0 for the family.

    The longitude condition reduces, in the v0 coordinate, to

        omega2 + nu2 + f nu3 = (t^4 - 1)(t^4 + j (t^4 - 4 t^2 + 1)^2) / t^5

    times beta, and the relator's v+ coordinate (once beta = 0) to

        (t^2 - 1) omega1_alpha + 2 f = -2 t^-3 (t^4 - 1)(2j t^4 - (6j+1) t^2 + 2j)

    times alpha.  Both are asserted exactly from the closed forms; a
    mismatch is a hard error.  Returns the first (beta) identity
    polynomial.
    """
    if j < 1:
        raise ValueError(f"family index must be >= 1, got {j}")
    (omega1_alpha, omega2_beta, nu2_beta, _omega3_beta, nu3_beta,
     _su, _ss) = _family_closed_forms(j)
    f = f_upper_entry(j)
    L = LaurentPoly.from_terms

    beta_lhs = omega2_beta + nu2_beta + f * nu3_beta
    quartic = L({4: 1, 2: -4, 0: 1})
    beta_rhs = (L({4: 1, 0: -1}) * (L({4: 1}) + j * quartic * quartic)).shift(-5)
    if beta_lhs != beta_rhs:
        raise ClosedFormMismatch(f"longitude beta identity fails at j={j}")

    alpha_lhs = L({2: 1, 0: -1}) * omega1_alpha + 2 * f
    alpha_rhs = L({4: 1, 0: -1}) * L({4: 2 * j, 2: -(6 * j + 1), 0: 2 * j})
    if alpha_lhs.shift(3) != -2 * alpha_rhs:
        raise ClosedFormMismatch(f"relator alpha identity fails at j={j}")
    return beta_lhs
