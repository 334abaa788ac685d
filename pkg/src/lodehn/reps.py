"""SL2 matrices over exact rings, the adjoint action on sl2, the
diagonal-plus-unipotent meridian representations, and two independent
Alexander polynomial computations.

The adjoint is written in the sl2 basis

    v+ = [[0,1],[0,0]],   v0 = [[1,0],[0,-1]],   v- = [[0,0],[1,0]],

so conjugation by [[a,b],[c,d]] becomes the 3x3 matrix

    [ a^2   -2ab       -b^2 ]
    [ -ac   ad + bc     bd  ]
    [ -c^2   2cd        d^2 ].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .polynomials import LaurentPoly, Poly, poly_gcd
from .quotient import AlgebraicElement, ModulusBranch
from .twobridge import TwoBridgeFraction, build_presentation
from .words import Word


class Mat2:
    """2x2 matrix with entries in any ring supporting + - * and int mixing."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse_unimodular(self) -> "Mat2":
        """Inverse of a determinant-1 matrix (the adjugate)."""
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return (
            self.a == other.a and self.b == other.b
            and self.c == other.c and self.d == other.d
        )

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0 and self.c == 0 and self.d == 1

    def __repr__(self) -> str:
        return f"Mat2({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


class Mat3:
    """3x3 matrix as a tuple of row tuples; zero entries may stay ints."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("expected a 3x3 entry grid")

    @classmethod
    def identity(cls) -> "Mat3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def zero(cls) -> "Mat3":
        return cls(((0, 0, 0), (0, 0, 0), (0, 0, 0)))

    def __matmul__(self, other: "Mat3") -> "Mat3":
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = 0
                for k in range(3):
                    left, right = self.rows[i][k], other.rows[k][j]
                    if left == 0 or right == 0:
                        continue
                    term = left * right
                    acc = term if acc == 0 else acc + term
                row.append(acc)
            out.append(row)
        return Mat3(out)

    def __add__(self, other: "Mat3") -> "Mat3":
        return Mat3(
            tuple(
                tuple(self.rows[i][j] + other.rows[i][j] for j in range(3))
                for i in range(3)
            )
        )

    def __sub__(self, other: "Mat3") -> "Mat3":
        return Mat3(
            tuple(
                tuple(self.rows[i][j] - other.rows[i][j] for j in range(3))
                for i in range(3)
            )
        )

    def apply(self, vec) -> Tuple:
        out = []
        for i in range(3):
            acc = 0
            for k in range(3):
                left, right = self.rows[i][k], vec[k]
                if left == 0 or right == 0:
                    continue
                term = left * right
                acc = term if acc == 0 else acc + term
            out.append(acc)
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat3):
            return NotImplemented
        return all(
            self.rows[i][j] == other.rows[i][j]
            for i in range(3) for j in range(3)
        )

    def __repr__(self) -> str:
        return f"Mat3({self.rows!r})"


def adjoint(m: Mat2) -> Mat3:
    """Conjugation action of a determinant-1 matrix on sl2 in the basis
    v+, v0, v-."""
    if m.det() != 1:
        raise ValueError("adjoint requires determinant 1")
    a, b, c, d = m.a, m.b, m.c, m.d
    return Mat3((
        (a * a, -2 * (a * b), -(b * b)),
        (-(a * c), a * d + b * c, b * d),
        (-(c * c), 2 * (c * d), d * d),
    ))


@dataclass(frozen=True)
class LaurentRing:
    """Coefficient-ring descriptor for Q[t, t^-1]."""

    @property
    def zero(self) -> LaurentPoly:
        return LaurentPoly()

    @property
    def one(self) -> LaurentPoly:
        return LaurentPoly(0, (1,))

    def coerce(self, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly(0, (x,))
        raise TypeError(f"cannot coerce {type(x).__name__} into Q[t, t^-1]")


@dataclass(frozen=True)
class QuotientRing:
    """Coefficient-ring descriptor for Q[t]/(m)."""

    branch: ModulusBranch

    @property
    def zero(self) -> AlgebraicElement:
        return self.branch.element(0)

    @property
    def one(self) -> AlgebraicElement:
        return self.branch.element(1)

    def coerce(self, x) -> AlgebraicElement:
        if isinstance(x, AlgebraicElement):
            if x.branch != self.branch:
                return x.reduce_to(self.branch)
            return x
        if isinstance(x, (int, Fraction, Poly)):
            return self.branch.element(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into the quotient ring")


@dataclass(frozen=True)
class RationalRing:
    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q")


CoefficientRing = Union[LaurentRing, QuotientRing, RationalRing]


class RepAssignment:
    """Images of the generators x and y, with cached inverses and
    adjoint matrices.  Both images must have determinant 1."""

    __slots__ = ("ring", "image_x", "image_y", "_images", "_adjoints")

    def __init__(self, ring: CoefficientRing, image_x: Mat2, image_y: Mat2):
        if image_x.det() != 1 or image_y.det() != 1:
            raise ValueError("generator images must have determinant 1")
        self.ring = ring
        self.image_x = image_x
        self.image_y = image_y
        inv_x = image_x.inverse_unimodular()
        inv_y = image_y.inverse_unimodular()
        self._images = {
            ("x", 1): image_x, ("x", -1): inv_x,
            ("y", 1): image_y, ("y", -1): inv_y,
        }
        self._adjoints = {key: adjoint(m) for key, m in self._images.items()}

    def image(self, gen: str, sign: int = 1) -> Mat2:
        return self._images[(gen, sign)]

    def ad(self, gen: str, sign: int = 1) -> Mat3:
        return self._adjoints[(gen, sign)]


def eval_word_matrix(word: Word, rep: RepAssignment) -> Mat2:
    """Product of generator images in word order; empty word gives the
    identity."""
    m = Mat2.identity()
    for gen, sign in word:
        m = m @ rep.image(gen, sign)
    return m


def meridian_rep_laurent() -> RepAssignment:
    """x -> [[t,0],[0,1/t]], y -> [[t,1],[0,1/t]] over Q[t, t^-1]."""
    t = LaurentPoly.monomial(1)
    tinv = LaurentPoly.monomial(-1)
    ring = LaurentRing()
    return RepAssignment(
        ring,
        Mat2(t, ring.zero, ring.zero, tinv),
        Mat2(t, ring.one, ring.zero, tinv),
    )


def f_upper_entry(j: int) -> LaurentPoly:
    """Closed form of the upper-right entry of the family word image:
    -j t^3 + (5j+1) t - (5j+1) t^-1 + j t^-3."""
    if j < 1:
        raise ValueError(f"family index must be >= 1, got {j}")
    return LaurentPoly.from_terms({3: -j, 1: 5 * j + 1, -1: -(5 * j + 1), -3: j})


class AlexanderMismatch(RuntimeError):
    """The two independent Alexander computations disagree."""


def normalize_alexander(value: Union[Poly, LaurentPoly]) -> Poly:
    """Canonical representative: shift by a unit so the constant term is
    nonzero, clear denominators to coprime integer coefficients, and
    make the leading coefficient positive.  Idempotent."""
    laurent = value if isinstance(value, LaurentPoly) else value.to_laurent()
    if laurent.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    shifted = Poly(laurent.coeffs)
    return shifted.primitive()


def alexander_via_rep(fraction: TwoBridgeFraction) -> Poly:
    """Alexander polynomial from the meridian representation over
    Q[t, t^-1]: the two sides of the defining relation agree exactly
    when t^2 is a root, so their upper-right difference is the
    polynomial evaluated at t^2."""
    pres = build_presentation(fraction)
    rep = meridian_rep_laurent()
    pw = eval_word_matrix(pres.w, rep)
    left = rep.image_x @ pw
    right = pw @ rep.image_y
    difference = left.b - right.b
    if difference.is_zero:
        raise AssertionError("degenerate relator difference")
    if not difference.has_only_even_exponents():
        raise AssertionError(
            "odd exponents in the relator difference: presentation bug"
        )
    return normalize_alexander(difference.deflate(2))


def alexander_via_fox(fraction: TwoBridgeFraction) -> Poly:
    """Alexander polynomial by the classical free-derivative route,
    abelianizing the derivative of the relator with respect to x."""
    pres = build_presentation(fraction)
    terms: dict[int, int] = {}
    total = 0
    for gen, sign in pres.relator:
        if gen == "x":
            if sign > 0:
                terms[total] = terms.get(total, 0) + 1
            else:
                terms[total - 1] = terms.get(total - 1, 0) - 1
        total += sign
    derivative = LaurentPoly.from_terms(terms)
    if derivative.is_zero:
        raise AssertionError("vanishing free derivative: presentation bug")
    return normalize_alexander(derivative)


def burde_de_rham_assignment(
    branch: ModulusBranch, relator: Word
) -> RepAssignment:
    """The reducible non-abelian representation x -> [[t,0],[0,1/t]],
    y -> [[t,1],[0,1/t]] with t the residue class mod the branch.

    The defining relator must evaluate to the identity in the quotient
    ring; a failure means the modulus does not divide the Alexander
    polynomial evaluated at t^2 (or an upstream bug) and is a hard
    error.  Branches touching t = 0 or t = +-1 are rejected.
    """
    modulus = branch.modulus
    t_poly = Poly([0, 1])
    if poly_gcd(modulus, t_poly).degree != 0:
        raise ValueError("branch contains t = 0")
    if poly_gcd(modulus, Poly([-1, 0, 1])).degree != 0:
        raise ValueError("branch contains t = +-1; rejected")
    ring = QuotientRing(branch)
    t = branch.t()
    tinv = t.inverse()
    rep = RepAssignment(
        ring,
        Mat2(t, ring.zero, ring.zero, tinv),
        Mat2(t, ring.one, ring.zero, tinv),
    )
    image = eval_word_matrix(relator, rep)
    if not image.is_identity():
        raise ValueError(
            "relator does not map to the identity on this branch: the "
            "modulus is not a divisor of the Alexander polynomial at t^2"
        )
    return rep
