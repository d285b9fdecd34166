"""Exact linear algebra over `fractions.Fraction`.

Everything here works on small dense matrices (dimension at most ~6), so
plain Gaussian elimination with exact pivots is both fast enough and
bit-reproducible.  Matrices are lists of row tuples/lists of Fractions.
"""

from fractions import Fraction
from math import gcd


def rref(rows):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns).  Input rows are not modified.
    """
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def nullspace(rows, ncols):
    """Basis of the right null space of the matrix, as row vectors."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        basis.append(tuple(v))
    return basis


def solve_unique(a_rows, b):
    """Unique solution of A x = b (A need not be square); None otherwise."""
    n = len(a_rows[0])
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return tuple(row[-1] for row in reduced)


def primitive_integer_vector(fracs):
    """Scale a rational vector to coprime integers, preserving direction.

    The sign is normalised so that the first nonzero entry is positive.
    Returns a tuple of ints; the zero vector maps to itself.
    """
    fracs = [Fraction(x) for x in fracs]
    if all(x == 0 for x in fracs):
        return tuple(0 for _ in fracs)
    lcm = 1
    for x in fracs:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)
