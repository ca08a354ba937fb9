"""Small exact matrix helpers over int and Fraction.

Matrices are tuples of row tuples. Nothing here ever touches a float.
"""

from fractions import Fraction
from math import gcd


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def column(a, j):
    return tuple(row[j] for row in a)


def from_columns(cols, nrows=None):
    if not cols:
        return tuple(() for _ in range(nrows or 0))
    return tuple(zip(*cols))


def normalize(a):
    """Turn integral Fractions back into ints."""
    return tuple(
        tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in row)
        for row in a
    )


def is_integral(a):
    return all(not isinstance(x, Fraction) or x.denominator == 1 for row in a for x in row)


def rank(a):
    return len(_echelon([list(map(Fraction, row)) for row in a]))


def _echelon(rows):
    m = [r[:] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return pivots


def det(a):
    """Exact determinant (Bareiss for integer input, fractions otherwise)."""
    n = len(a)
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in a for x in row):
        m = [list(row) for row in a]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if p is None:
                    return 0
                m[k], m[p] = m[p], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]
    m = [list(map(Fraction, row)) for row in a]
    d = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return 0
        if p != k:
            m[k], m[p] = m[p], m[k]
            d = -d
        d *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return d


def inverse(a):
    """Exact inverse over Q; raises ValueError when singular."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return normalize(tuple(tuple(row[n:]) for row in m))


def primitive(v):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    w = [int(x * den) for x in v]
    g = 0
    for x in w:
        g = gcd(g, x)
    if g == 0:
        return tuple(w)
    return tuple(x // g for x in w)
