"""Exact univariate polynomial and Laurent polynomial arithmetic over Q.

``Poly`` stores Fraction coefficients in ascending degree order;
``LaurentPoly`` adds an integer offset for the lowest exponent.  The
real-root machinery (Sturm chains, isolation, refinement) is exact:
every interval endpoint is a rational that is not a root of the query
polynomial, so counts are unconditional.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

Scalar = Union[int, Fraction]


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Poly:
    """Dense polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of degree k; trailing zeros are
    trimmed, so the zero polynomial has an empty tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        return self + (-other if isinstance(other, Poly) else Poly([-_frac(other)]))

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly([other]) - self

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            q = _frac(other)
            return Poly(tuple(c * q for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + k] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.leading
        return self if lead == 1 else Poly(tuple(c / lead for c in self.coeffs))

    def divmod(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        quo = [Fraction(0)] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quo[i - dd] = q
            for k in range(dd + 1):
                rem[i - dd + k] -= q * divisor.coeffs[k]
        return Poly(quo), Poly(rem)

    def __floordiv__(self, divisor: "Poly") -> "Poly":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "Poly") -> "Poly":
        return self.divmod(divisor)[1]

    def shift_up(self, k: int) -> "Poly":
        """Multiply by t^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift on a plain polynomial")
        if self.is_zero:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def inflate(self, k: int) -> "Poly":
        """Substitute t -> t^k, e.g. p(t) -> p(t^2) for k = 2."""
        if k < 1:
            raise ValueError("inflation factor must be >= 1")
        if self.is_zero or k == 1:
            return self
        out = [Fraction(0)] * (k * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return Poly(out)

    def primitive(self) -> "Poly":
        """Integer-coefficient associate with coprime coefficients and
        positive leading coefficient."""
        if self.is_zero:
            raise ValueError("zero polynomial has no primitive part")
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for n in ints:
            g = gcd(g, n)
        if ints[-1] < 0:
            g = -g
        return Poly(tuple(Fraction(n, g) for n in ints))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_laurent(self) -> "LaurentPoly":
        return LaurentPoly(0, self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the exact Euclidean algorithm over Q."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Return (g, s, u) with g = gcd(a, b) monic and s*a + u*b = g."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    u0, u1 = Poly(), Poly([1])
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    lead = r0.leading
    return r0.monic(), s0 * (1 / lead), u0 * (1 / lead)


def squarefree_decomposition(a: Poly) -> List[Tuple[Poly, int]]:
    """Yun's algorithm: pairwise-coprime monic square-free factors with
    multiplicities whose product (with multiplicity) rebuilds the input
    up to its leading unit."""
    if a.is_zero:
        raise ValueError("square-free decomposition of the zero polynomial")
    a = a.monic()
    if a.degree == 0:
        return []
    d = a.derivative()
    g = poly_gcd(a, d)
    out: List[Tuple[Poly, int]] = []
    b = a // g
    c = d // g
    z = c - b.derivative()
    i = 1
    while b.degree > 0:
        fi = poly_gcd(b, z) if not z.is_zero else b.monic()
        if fi.degree > 0:
            out.append((fi, i))
        b = b // fi
        c = z // fi
        z = c - b.derivative()
        i += 1
    return out


def squarefree_part(a: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``a``."""
    if a.is_zero:
        raise ValueError("square-free part of the zero polynomial")
    a = a.monic()
    if a.degree == 0:
        return a
    return a // poly_gcd(a, a.derivative())


class RootAtEndpoint(ValueError):
    """A Sturm query endpoint is itself a root; nudge and retry."""

    def __init__(self, endpoint: Fraction):
        super().__init__(f"interval endpoint {endpoint} is a root")
        self.endpoint = endpoint


def sturm_chain(p: Poly) -> List[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_at(p: Poly, x: Optional[Fraction], at_plus_infinity: bool) -> int:
    if x is not None:
        return _sign(p(x))
    if p.is_zero:
        return 0
    s = _sign(p.leading)
    if not at_plus_infinity and p.degree % 2 == 1:
        s = -s
    return s


def _variations(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


Endpoint = Optional[Fraction]  # None encodes the infinite endpoint


def sturm_count(p: Poly, interval: Tuple[Endpoint, Endpoint]) -> int:
    """Exact number of distinct real roots in the open interval.

    Non-square-free input is replaced by its square-free part, so the
    count is always of distinct roots.  An endpoint that is itself a
    root raises :class:`RootAtEndpoint` so the caller can nudge it.
    """
    if p.is_zero:
        raise ValueError("root counting on the zero polynomial")
    p = squarefree_part(p)
    if p.degree == 0:
        return 0
    lo, hi = interval
    lo = None if lo is None else _frac(lo)
    hi = None if hi is None else _frac(hi)
    if lo is not None and hi is not None and lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    for endpoint in (lo, hi):
        if endpoint is not None and p(endpoint) == 0:
            raise RootAtEndpoint(endpoint)
    chain = sturm_chain(p)
    at_lo = _variations([_sign_at(q, lo, at_plus_infinity=False) for q in chain])
    at_hi = _variations([_sign_at(q, hi, at_plus_infinity=True) for q in chain])
    return at_lo - at_hi


def root_bound(p: Poly) -> Fraction:
    """A rational B with every real root strictly inside (-B, B)."""
    if p.is_zero:
        raise ValueError("root bound of the zero polynomial")
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def _interior_non_root(p: Poly, lo: Fraction, hi: Fraction) -> Fraction:
    """An interior point of (lo, hi) that is not a root of p."""
    mid = (lo + hi) / 2
    step = (hi - lo) / 4
    while p(mid) == 0:
        mid += step
        step /= 2
        if not lo < mid < hi:
            raise AssertionError("failed to dodge a root inside the interval")
    return mid


def isolate_real_roots(p: Poly) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint rational open intervals, one distinct real root each.

    Requires square-free input; endpoints are never roots.  Intervals
    come back sorted left to right.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if poly_gcd(p, p.derivative() if p.degree > 0 else Poly([1])).degree > 0:
        raise ValueError("input must be square-free")
    if p.degree == 0:
        return []
    bound = root_bound(p)
    total = sturm_count(p, (-bound, bound))
    out: List[Tuple[Fraction, Fraction]] = []
    stack: List[Tuple[Fraction, Fraction, int]] = [(-bound, bound, total)]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = _interior_non_root(p, lo, hi)
        left = sturm_count(p, (lo, mid))
        stack.append((mid, hi, count - left))
        stack.append((lo, mid, left))
    out.sort()
    if len(out) != total:
        raise AssertionError("isolation lost a root")
    return out


def refine_isolating_interval(
    p: Poly, lo: Fraction, hi: Fraction, max_width: Fraction
) -> Tuple[Fraction, Fraction]:
    """Shrink an isolating interval below ``max_width`` by bisection.

    The interval must contain exactly one root of ``p``; the returned
    endpoints are again non-roots.
    """
    lo, hi = _frac(lo), _frac(hi)
    max_width = _frac(max_width)
    while hi - lo > max_width:
        mid = _interior_non_root(p, lo, hi)
        if sturm_count(p, (lo, mid)) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


class LaurentPoly:
    """Laurent polynomial: ``coeffs[i]`` is the coefficient of
    t^(offset + i).  Stored trimmed on both ends; zero has no coeffs."""

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int = 0, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        drop = 0
        while drop < len(cs) and cs[drop] == 0:
            drop += 1
        if drop:
            cs = cs[drop:]
            offset += drop
        if not cs:
            offset = 0
        self.offset = offset
        self.coeffs = tuple(cs)

    @classmethod
    def from_terms(cls, terms: Dict[int, Scalar]) -> "LaurentPoly":
        if not terms:
            return cls()
        low = min(terms)
        high = max(terms)
        coeffs = [Fraction(0)] * (high - low + 1)
        for k, c in terms.items():
            coeffs[k - low] = _frac(c)
        return cls(low, coeffs)

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> "LaurentPoly":
        return cls(exponent, (coefficient,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        if self.is_zero:
            raise ValueError("zero Laurent polynomial has no valuation")
        return self.offset

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero Laurent polynomial has no degree")
        return self.offset + len(self.coeffs) - 1

    def terms(self) -> Dict[int, Fraction]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def coefficient(self, exponent: int) -> Fraction:
        i = exponent - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.offset == other.offset and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.is_zero
            return self.offset == 0 and self.coeffs == (_frac(other),)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.offset, tuple(-c for c in self.coeffs))

    def __add__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.offset, other.offset)
        high = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [Fraction(0)] * (high - low)
        for i, c in enumerate(self.coeffs):
            out[self.offset - low + i] = c
        for i, c in enumerate(other.coeffs):
            out[other.offset - low + i] += c
        return LaurentPoly(low, out)

    __radd__ = __add__

    def __sub__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self + (-_frac(other))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly()
            if other == 1:
                return self
            q = _frac(other)
            return LaurentPoly(self.offset, tuple(c * q for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + k] += a * b
        return LaurentPoly(self.offset + other.offset, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k (any integer k)."""
        if self.is_zero:
            return self
        return LaurentPoly(self.offset + k, self.coeffs)

    def reciprocal(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        if self.is_zero:
            return self
        return LaurentPoly(-(self.offset + len(self.coeffs) - 1),
                           tuple(reversed(self.coeffs)))

    def has_only_even_exponents(self) -> bool:
        return all((self.offset + i) % 2 == 0
                   for i, c in enumerate(self.coeffs) if c != 0)

    def deflate(self, k: int) -> "LaurentPoly":
        """Substitute t^k -> t; every exponent must be divisible by k."""
        if k < 1:
            raise ValueError("deflation factor must be >= 1")
        if self.is_zero or k == 1:
            return self
        terms = {}
        for e, c in self.terms().items():
            if e % k != 0:
                raise ValueError(f"exponent {e} not divisible by {k}")
            terms[e // k] = c
        return LaurentPoly.from_terms(terms)

    def to_poly(self) -> Poly:
        if self.is_zero:
            return Poly()
        if self.offset < 0:
            raise ValueError("negative exponents; shift before converting")
        return Poly((Fraction(0),) * self.offset + self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        x = _frac(x)
        if self.offset < 0 and x == 0:
            raise ZeroDivisionError("evaluating a Laurent polynomial at 0")
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x**self.offset

    def __repr__(self) -> str:
        return f"LaurentPoly.from_terms({{{', '.join(f'{e}: {c}' for e, c in sorted(self.terms().items()))}}})"
