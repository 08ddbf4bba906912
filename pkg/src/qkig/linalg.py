"""Exact linear algebra over the rationals for small dense matrices.

Matrices are lists of row vectors whose entries are ints or Fractions.
Ranks are computed fraction-free (Bareiss) on integer-cleared rows; reduced
echelon forms and nullspaces use exact rational pivoting.  No routine
mutates its input.
"""

from fractions import Fraction
from math import gcd


def primitive_int_row(row):
    """Scale a rational row to a primitive integer row (gcd 1, first nonzero > 0).

    Returns a tuple of ints; the zero row maps to itself.
    """
    if all(isinstance(x, int) for x in row):
        ints = list(row)
    else:
        fracs = [Fraction(x) for x in row]
        lcm = 1
        for x in fracs:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        ints = [int(x * lcm) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def rank(rows):
    """Rank of a matrix, via fraction-free elimination on integer-cleared rows."""
    m = [list(primitive_int_row(r)) for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rk = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(rk + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * m[rk][col] - m[r][col] * m[rk][c]) // prev
            m[r][col] = 0
        prev = m[rk][col]
        rk += 1
        if rk == nrows:
            break
    return rk


def row_basis(rows):
    """Primitive integer basis of the row space, via fraction-free elimination."""
    m = [list(primitive_int_row(r)) for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    rk = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(rk + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * m[rk][col] - m[r][col] * m[rk][c]) // prev
            m[r][col] = 0
        prev = m[rk][col]
        rk += 1
        if rk == nrows:
            break
    return [primitive_int_row(m[i]) for i in range(rk)]


def rref(rows):
    """Reduced row echelon form; returns the nonzero rows as Fraction tuples.

    Canonical for the row space: two matrices have equal row spaces iff their
    rrefs are equal.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return ()
    nrows, ncols = len(m), len(m[0])
    rk = 0
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = m[rk][col]
        m[rk] = [x / inv for x in m[rk]]
        for r in range(nrows):
            if r != rk and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
        if rk == nrows:
            break
    return tuple(tuple(r) for r in m[:rk])


def nullspace(rows, ncols=None):
    """Basis of { x : M x = 0 } for the matrix M with the given rows."""
    rows = list(rows)
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [tuple(Fraction(int(i == j)) for j in range(ncols))
                for i in range(ncols)]
    ncols = len(rows[0])
    red = rref(rows)
    pivots = []
    for r in red:
        for j, x in enumerate(r):
            if x != 0:
                pivots.append(j)
                break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pj in zip(red, pivots):
            vec[pj] = -r[free]
        basis.append(tuple(vec))
    return basis


def stack(*row_groups):
    out = []
    for g in row_groups:
        out.extend(tuple(r) for r in g)
    return out


def intersect_rowspaces(rows_a, rows_b):
    """Basis of the intersection of the two row spaces."""
    a = [tuple(r) for r in rows_a]
    b = [tuple(r) for r in rows_b]
    if not a or not b:
        return []
    ncols = len(a[0])
    both = a + b
    # coefficient vectors c with sum_i c_i * both_i = 0
    transposed = [[both[i][j] for i in range(len(both))] for j in range(ncols)]
    vecs = []
    for c in nullspace(transposed, ncols=len(both)):
        v = [Fraction(0)] * ncols
        for ci, row in zip(c[:len(a)], a):
            if ci:
                v = [x + ci * y for x, y in zip(v, row)]
        if any(v):
            vecs.append(tuple(v))
    return list(rref(vecs))


def in_rowspace(vec, rows):
    """Whether ``vec`` lies in the row space of ``rows``."""
    base = rank(rows)
    return rank(stack(rows, [vec])) == base


def invert_lower_unitriangular(z):
    """Exact integer inverse of a lower unitriangular integer matrix."""
    size = len(z)
    m = [[0] * size for _ in range(size)]
    for i in range(size):
        assert z[i][i] == 1, "matrix must be unitriangular"
        row = [0] * size
        row[i] = 1
        for j in range(i):
            zij = z[i][j]
            if zij:
                mj = m[j]
                for k in range(j + 1):
                    row[k] -= zij * mj[k]
        m[i] = row
    return m
