#!/usr/bin/env python3
"""Independent determinant oracle used to freeze expected values in the C++ tests.

Groups are realised as permutation groups acting on points of Z_3 x Z_3 (or Z_9),
the group determinant is the determinant of (a_{g h^-1}) computed with sympy.
Nothing here shares code with the C++ implementation.
"""
import itertools
import random
import sys

import sympy


def perm_group(points, gens, words):
    """Return list of permutations (as tuples) for the words X^i Y^j Z^k in flat order."""
    idx = {p: n for n, p in enumerate(points)}

    def as_perm(fn):
        return tuple(idx[fn(p)] for p in points)

    def compose(p, q):  # (p o q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(len(points)))

    ident = tuple(range(len(points)))
    gperms = [as_perm(g) for g in gens]
    elems = []
    for w in words:
        acc = ident
        for gen, e in zip(gperms, w):
            for _ in range(e):
                acc = compose(acc, gen)
        elems.append(acc)
    assert len(set(elems)) == len(elems)
    return elems, compose


def inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def build(name):
    if name in ("g18-4", "z3xd6"):
        pts = [(a, b) for b in range(3) for a in range(3)]
        X = lambda p: ((p[0] + 1) % 3, p[1])
        Y = lambda p: (p[0], (p[1] + 1) % 3)
        if name == "g18-4":
            Z = lambda p: ((-p[0]) % 3, (-p[1]) % 3)
        else:
            Z = lambda p: ((-p[0]) % 3, p[1])
        words = [(i, j, k) for k in range(2) for j in range(3) for i in range(3)]
        return perm_group(pts, [X, Y, Z], words)
    if name == "d18":
        pts = list(range(9))
        X = lambda a: (a + 1) % 9
        Z = lambda a: (-a) % 9
        words = [(i, k) for k in range(2) for i in range(9)]
        return perm_group(pts, [X, Z], words)
    raise ValueError(name)


def group_det(name, coeffs):
    elems, compose = build(name)
    index = {e: n for n, e in enumerate(elems)}
    n = len(elems)
    M = sympy.Matrix(n, n, lambda r, c: coeffs[index[compose(elems[r], inverse(elems[c]))]])
    return int(M.det(method="bareiss"))


def poly(terms):
    """terms: dict (i, j) -> coefficient for x^i y^j, exponents taken mod 3."""
    v = [0] * 9
    for (i, j), c in terms.items():
        v[(i % 3) + 3 * (j % 3)] += c
    return v


def mul_xy(p, q):
    r = [0] * 9
    for a in range(9):
        for b in range(9):
            i = (a % 3 + b % 3) % 3
            j = (a // 3 + b // 3) % 3
            r[i + 3 * j] += p[a] * q[b]
    return r


def add(*ps):
    return [sum(c) for c in zip(*ps)]


def scale(p, s):
    return [s * c for c in p]


ONE = poly({(0, 0): 1})
X = poly({(1, 0): 1})
Y = poly({(0, 1): 1})
X2 = poly({(2, 0): 1})
Y2 = poly({(0, 2): 1})
H = mul_xy(add(ONE, X, X2), add(ONE, Y, Y2))


def P(*parts):
    """Sum of monomial products given as lists of factors."""
    return add(*parts)


def m_(a, b):
    return mul_xy(a, b)


def families():
    o = ONE
    fam = {}
    # SmallGroup(18,4)
    fam[("g18-4", "coprime")] = (o, [0] * 9, +1, +1)
    fam[("g18-4", "2not3")] = (
        P(o, X, X2, Y, scale(m_(Y2, X2), -1)),
        P(o, X, m_(Y, X), scale(m_(Y2, add(X, X2)), -1)),
        +1, +1)
    fam[("g18-4", "div6-zero")] = (
        P(o, X, scale(m_(Y, X2), -1), scale(m_(Y2, add(o, X)), -1)),
        P(o, Y, scale(m_(Y2, add(o, X, X2)), -1)),
        -1, +1)
    fam[("g18-4", "div6")] = (
        P(o, X, X2, m_(Y, add(o, X)), scale(m_(Y2, X2), -1)),
        m_(add(o, X2), add(o, Y, scale(Y2, -1))),
        +1, +1)
    fam[("g18-4", "3not2-odd3")] = (
        P(o, X, X2, m_(Y, add(o, X, X2)), m_(Y2, add(o, scale(X, -1), scale(X2, -1)))),
        P(o, X, X2, m_(Y, add(o, X)), m_(Y2, add(o, scale(X, -1), scale(X2, -1)))),
        +1, +1)
    fam[("g18-4", "3not2")] = (
        P(o, X, X2, m_(Y, add(o, X)), scale(m_(Y2, add(o, X, X2)), -1)),
        P(o, X, X2, m_(Y, add(o, X, scale(X2, -1))), scale(m_(Y2, add(o, X, X2)), -1)),
        +1, +1)
    # Z_3 x D_6
    fam[("z3xd6", "coprime")] = (o, [0] * 9, +1, +1)
    fam[("z3xd6", "div6")] = (P(o, X, Y, Y2), P(o, Y), +1, +1)
    fam[("z3xd6", "div6-zero")] = (
        P(o, X, scale(X2, -1), m_(Y, add(o, scale(X2, -1))), m_(Y2, add(o, scale(X2, -1)))),
        P(o, scale(X2, -1), m_(Y, add(o, X, scale(X2, -1))), m_(Y2, add(X, scale(X2, -1)))),
        +1, -1)
    fam[("z3xd6", "3not2")] = (P(o, Y), o, +1, +1)
    fam[("z3xd6", "3not2-odd3")] = (
        P(o, X, m_(Y, add(o, X)), m_(Y2, add(o, X, scale(X2, -1)))),
        P(o, X, m_(Y, add(o, X, scale(X2, -1))), Y2),
        +1, +1)
    fam[("z3xd6", "2not3")] = (
        P(o, X, scale(X2, -1), m_(Y, X2), m_(Y2, X2)),
        P(o, X, scale(X2, -1), m_(Y, add(scale(X, -1), X2)), m_(Y2, add(scale(o, -1), X2))),
        +1, +1)
    return fam


def family_coeffs(f, g, fs, gs, m, swap):
    ff = add(f, scale(H, fs * m))
    gg = add(g, scale(H, gs * m))
    if swap:
        ff, gg = gg, ff
    return ff + gg


def main():
    mode = sys.argv[1] if len(sys.argv) > 1 else "families"
    if mode == "families":
        for (grp, fid), (f, g, fs, gs) in families().items():
            for swap in (False, True):
                vals = [group_det(grp, family_coeffs(f, g, fs, gs, m, swap)) for m in (-1, 0, 1)]
                print(grp, fid + ("/swap" if swap else ""), vals, "coeffs(m=0):",
                      family_coeffs(f, g, fs, gs, 0, swap))
    elif mode == "random":
        rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else 1)
        for grp in ("g18-4", "z3xd6", "d18"):
            for _ in range(4):
                c = [rng.randint(-3, 3) for _ in range(18)]
                print(grp, ",".join(map(str, c)), group_det(grp, c))
    elif mode == "det":
        grp = sys.argv[2]
        c = [int(t) for t in sys.argv[3].split(",")]
        print(group_det(grp, c))


if __name__ == "__main__":
    main()
