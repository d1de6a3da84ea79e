"""Degree-truncated noncommutative Groebner basis by linear algebra.

Computes, for the homogeneous ideal generated by xy - z^2, zx - y^2, yz - x^2
in k<x,y,z> and deg-lex order with z > y > x, the reduced basis elements up to
a degree bound. Used once to freeze the leading-words test fixture.
"""
import itertools
import json
import sys
from fractions import Fraction

LETTERS = "xyz"
RANK = {"x": 0, "y": 1, "z": 2}
GENS = [
    {"xy": Fraction(1), "zz": Fraction(-1)},
    {"zx": Fraction(1), "yy": Fraction(-1)},
    {"yz": Fraction(1), "xx": Fraction(-1)},
]


def key(w):
    return tuple(RANK[c] for c in w)


def rref(rows, cols):
    col_index = {c: i for i, c in enumerate(cols)}
    mat = []
    for r in rows:
        v = [Fraction(0)] * len(cols)
        for w, c in r.items():
            v[col_index[w]] += c
        mat.append(v)
    pivots = []
    row = 0
    for c in range(len(cols)):
        p = next((i for i in range(row, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[row], mat[p] = mat[p], mat[row]
        inv = 1 / mat[row][c]
        mat[row] = [x * inv for x in mat[row]]
        for i in range(len(mat)):
            if i != row and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[row])]
        pivots.append((c, row))
        row += 1
        if row == len(mat):
            break
    return [(cols[c], mat[r]) for c, r in pivots]


def main(max_deg):
    found = []
    for d in range(2, max_deg + 1):
        cols = sorted(("".join(t) for t in itertools.product(LETTERS, repeat=d)), key=key, reverse=True)
        rows = []
        for g in GENS:
            for k in range(d - 1):
                for u in itertools.product(LETTERS, repeat=k):
                    for v in itertools.product(LETTERS, repeat=d - 2 - k):
                        rows.append({"".join(u) + w + "".join(v): c for w, c in g.items()})
        for lead, vec in rref(rows, cols):
            if any(f in lead for f, _ in found):
                continue
            poly = [(cols[i], c) for i, c in enumerate(vec) if c != 0]
            found.append((lead, poly))
        print(d, [w for w, _ in found], file=sys.stderr)
    out = [[{"coeff": str(c), "word": list(w)} for w, c in poly] for _, poly in found]
    print(json.dumps(out))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
