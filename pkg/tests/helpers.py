"""Shared test utilities: random generators and the floating oracle."""

import json
import os

import mpmath as mp

from lodehn.polynomials import LaurentPoly
from lodehn.reps import Mat2
from lodehn.words import Word

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def load_fixture(name):
    with open(os.path.join(FIXTURES, name), encoding="utf-8") as handle:
        return json.load(handle)


def L(terms):
    return LaurentPoly.from_terms(terms)


def random_word(rng, length):
    letters = [
        (rng.choice(("x", "y")), rng.choice((1, -1))) for _ in range(length)
    ]
    return Word(letters)


def random_laurent(rng, max_terms=2, span=2, coeff=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rng.randint(-coeff, coeff)
        if c:
            terms[rng.randint(-span, span)] = c
    return LaurentPoly.from_terms(terms)


def random_unimodular_laurent(rng, factors=3):
    """Random product of elementary matrices over Q[t, t^-1]; det = 1."""
    m = Mat2(1, 0, 0, 1)
    for _ in range(factors):
        p = random_laurent(rng)
        if rng.random() < 0.5:
            m = m @ Mat2(1, p, 0, 1)
        else:
            m = m @ Mat2(1, 0, p, 1)
        if rng.random() < 0.3:
            t = LaurentPoly.monomial(rng.choice((-1, 1)))
            m = m @ Mat2(t, 0, 0, t.reciprocal())
    return m


def numeric_roots(modulus, dps=60):
    """All complex roots of a Poly, at high precision."""
    mp.mp.dps = dps
    coeffs = [
        mp.mpf(c.numerator) / mp.mpf(c.denominator)
        for c in reversed(modulus.coeffs)
    ]
    return mp.polyroots(coeffs, maxsteps=500, extraprec=300)


def eval_poly_complex(poly, x):
    acc = mp.mpc(0)
    for c in reversed(poly.coeffs):
        acc = acc * x + mp.mpf(c.numerator) / mp.mpf(c.denominator)
    return acc


def numeric_rank(rows, tol="1e-30"):
    """Rank by Gaussian elimination with partial pivoting on mpmath
    complex entries."""
    work = [list(row) for row in rows]
    if not work:
        return 0
    nrows, ncols = len(work), len(work[0])
    threshold = mp.mpf(tol)
    rank = 0
    for col in range(ncols):
        pivot, best = None, threshold
        for r in range(rank, nrows):
            if abs(work[r][col]) > best:
                pivot, best = r, abs(work[r][col])
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        work[rank] = [e / pv for e in work[rank]]
        for r in range(nrows):
            if r != rank and abs(work[r][col]) > 0:
                f = work[r][col]
                work[r] = [work[r][k] - f * work[rank][k] for k in range(ncols)]
        rank += 1
        if rank == nrows:
            break
    return rank


def system_numeric_rank_at(system, root):
    """Evaluate a quotient-ring matrix at a numeric root of its modulus
    and return the floating rank."""
    rows = [
        [eval_poly_complex(entry.value, root) for entry in row]
        for row in system.entries
    ]
    return numeric_rank(rows)
