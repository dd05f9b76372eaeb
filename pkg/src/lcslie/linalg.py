"""Exact dense linear algebra over the rationals.

Matrices are lists of rows and entries are fractions.Fraction.  All the
systems in this package are small (at most a few thousand unknowns), so
the implementations favour clarity over asymptotics.  Ranks are computed
by fraction-free (Bareiss) elimination on integer-scaled rows; solving
and kernels go through an ordinary reduced row echelon form.
"""

from fractions import Fraction
from math import lcm

Matrix = list  # list of rows, each a list of Fraction
Vector = list


def zeros(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def _integer_rows(a):
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    out = []
    for row in a:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(a):
    """Rank by fraction-free elimination.

    The Bareiss pivot rule m[i][j] <- (piv*m[i][j] - m[i][col]*m[r][j]) / prev
    keeps every intermediate entry an exact integer, so no coefficient
    growth beyond minors occurs and no rounding is possible.
    """
    if not a or not a[0]:
        return 0
    m = _integer_rows(a)
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = m[r][col]
        r += 1
        if r == nrows:
            break
    return r


def rref(a):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = [list(row) for row in a]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv_p = 1 / m[r][col]
        m[r] = [x * inv_p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(a):
    """Basis of the right kernel of a (ncols must be readable from a[0])."""
    nrows = len(a)
    if nrows == 0:
        raise ValueError("cannot infer column count of an empty matrix")
    ncols = len(a[0])
    m, pivots = rref(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][free]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution x of a x = b, or None when inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = m[i][-1]
    return x


def det(a):
    n = len(a)
    m = [list(row) for row in a]
    result = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        result *= m[col][col]
        inv_p = 1 / m[col][col]
        for i in range(col + 1, n):
            if m[i][col]:
                c = m[i][col] * inv_p
                m[i] = [x - c * y for x, y in zip(m[i], m[col])]
    return result


def inv(a):
    n = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(n))]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


def in_span(vectors, v):
    """Exact membership of v in the span of the given vectors."""
    if not vectors:
        return all(x == 0 for x in v)
    cols = transpose(vectors)
    return solve(cols, v) is not None
