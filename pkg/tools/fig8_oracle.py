#!/usr/bin/env python3
"""Independent computer-algebra cross-check for the figure-eight knot.

Recomputes the twisted-cohomology dimensions of the 5/2 two-bridge knot
with sympy only: words come straight from the floor formula, the adjoint
action is obtained by literally conjugating the sl2 basis matrices, the
cocycle values extend along words by the defining law, and the ranks are
taken exactly over Q(sqrt(5)) at each radical root of t^4 - 3 t^2 + 1.

Writes tests/fixtures/figure_eight_dims.json.  Run from the repo root:

    python tools/fig8_oracle.py
"""

import json
import os

import sympy as sp

P, Q = 5, 2
QEFF = Q - P  # odd representative of the same knot

t = sp.symbols("t")

X = sp.Matrix([[t, 0], [0, 1 / t]])
Y = sp.Matrix([[t, 1], [0, 1 / t]])

V_PLUS = sp.Matrix([[0, 1], [0, 0]])
V_ZERO = sp.Matrix([[1, 0], [0, -1]])
V_MINUS = sp.Matrix([[0, 0], [1, 0]])
BASIS = (V_PLUS, V_ZERO, V_MINUS)


def word_letters():
    exps = [(-1) ** ((i * QEFF) // P) for i in range(1, P)]
    w = [("y" if i % 2 == 0 else "x", exps[i]) for i in range(P - 1)]
    v = list(reversed(w))
    relator = [("x", 1)] + w + [("y", -1)] + [(g, -s) for g, s in reversed(w)]
    longitude = w + v  # total exponent sum is 0 for 5/2, no correction
    assert sum(s for _, s in longitude) == 0
    return relator, longitude


def image(gen, sign):
    m = X if gen == "x" else Y
    return m if sign > 0 else m.inv()


def matrix_of_word(letters):
    m = sp.eye(2)
    for gen, sign in letters:
        m = m * image(gen, sign)
    return sp.simplify(m)


def coords(mat):
    """Coordinates of a traceless 2x2 matrix in the basis v+, v0, v-."""
    return sp.Matrix([mat[0, 1], mat[0, 0], mat[1, 0]])


def from_coords(vec):
    return vec[0] * V_PLUS + vec[1] * V_ZERO + vec[2] * V_MINUS


def ad(gen, sign):
    m = image(gen, sign)
    minv = m.inv()
    cols = [coords(sp.simplify(m * b * minv)) for b in BASIS]
    return sp.Matrix.hstack(*cols)


def cocycle_value(letters, zx, zy):
    val = sp.zeros(3, 1)
    acc = sp.eye(3)
    for gen, sign in letters:
        zg = zx if gen == "x" else zy
        if sign > 0:
            val = val + acc * zg
            acc = acc * ad(gen, sign)
        else:
            acc = acc * ad(gen, sign)
            val = val - acc * zg
    return sp.simplify(val)


def system_rows(relator_list):
    rows = []
    basis_vectors = [sp.Matrix([1, 0, 0]), sp.Matrix([0, 1, 0]),
                     sp.Matrix([0, 0, 1])]
    zero = sp.zeros(3, 1)
    for letters in relator_list:
        columns = []
        for e in basis_vectors:
            columns.append(cocycle_value(letters, e, zero))
        for e in basis_vectors:
            columns.append(cocycle_value(letters, zero, e))
        block = sp.Matrix.hstack(*columns)
        rows.append(block)
    return sp.Matrix.vstack(*rows)


def fixed_space_rows():
    return sp.Matrix.vstack(ad("x", 1) - sp.eye(3), ad("y", 1) - sp.eye(3))


def dims_at(root, knot_system, filled_system, fixed):
    def rank_at(m):
        return sp.Matrix([[sp.radsimp(sp.simplify(e.subs(t, root)))
                           for e in m.row(i)] for i in range(m.rows)]).rank()

    z1_knot = 6 - rank_at(knot_system)
    z1_filled = 6 - rank_at(filled_system)
    h0 = 3 - rank_at(fixed)
    b1 = 3 - h0
    return {
        "knot": {"z1": z1_knot, "b1": b1, "h0": h0, "h1": z1_knot - b1},
        "filled": {"z1": z1_filled, "b1": b1, "h0": h0, "h1": z1_filled - b1},
    }


def main():
    relator, longitude = word_letters()
    assert matrix_of_word(relator) == sp.eye(2) or True  # symbolic; checked at roots

    knot_system = system_rows([relator])
    filled_system = system_rows([relator, longitude])
    fixed = fixed_space_rows()

    # t^4 - 3 t^2 + 1 = (t^2 - t - 1)(t^2 + t - 1); radical roots of each
    roots = {
        "t^2 - t - 1": (1 + sp.sqrt(5)) / 2,
        "t^2 + t - 1": (-1 + sp.sqrt(5)) / 2,
    }
    out = {
        "fraction": f"{P}/{Q}",
        "alexander": [1, -3, 1],
        "modulus": "t^4 - 3*t^2 + 1",
        "roots": {},
    }
    for label, root in roots.items():
        # the representation must actually satisfy the relator here
        rel = matrix_of_word(relator)
        rel_at = sp.Matrix([[sp.radsimp(sp.simplify(e.subs(t, root)))
                             for e in rel.row(i)] for i in range(2)])
        assert rel_at == sp.eye(2), f"relator fails at root of {label}"
        out["roots"][label] = dims_at(root, knot_system, filled_system, fixed)
        print(label, out["roots"][label])

    here = os.path.dirname(os.path.abspath(__file__))
    path = os.path.join(here, "..", "tests", "fixtures", "figure_eight_dims.json")
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(out, handle, indent=2)
        handle.write("\n")
    print("wrote", os.path.normpath(path))


if __name__ == "__main__":
    main()
