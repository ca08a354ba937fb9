"""Enumerating lattice vectors of a prescribed square.

Definite lattices use a Fincke-Pohst style recursive search whose bounds come
from an exact rational LDL^T decomposition, so no floating point is involved.
Other lattices need an explicit coordinate bound and are searched box-wise.
"""

import itertools
from fractions import Fraction
from math import ceil, floor, isqrt

from .lattice import LatticeError, _require_integral, signature


def _ldl(a):
    """Return (d, r) with a = r^T diag(d) r, r unit upper triangular (rational)."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    d = [Fraction(0)] * n
    r = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        d[i] = m[i][i]
        if d[i] <= 0:
            raise LatticeError("form is not positive definite")
        for j in range(i + 1, n):
            r[i][j] = m[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                m[j][k] -= r[i][j] * r[i][k] * d[i]
                m[k][j] = m[j][k]
    return d, r


def _sqrt_floor(x):
    """floor(sqrt(x)) for a non-negative Fraction."""
    if x <= 0:
        return 0
    s = isqrt(x.numerator // x.denominator)
    while Fraction((s + 1) ** 2) <= x:
        s += 1
    return s


def _definite_search(a, norm, bound=None):
    """All integer x with x^T a x == norm for positive definite a."""
    n = len(a)
    d, r = _ldl(a)
    out = []
    x = [0] * n

    def rec(i, budget):
        # budget = norm - sum_{k>i} d_k (x_k + sum_{j>k} r_kj x_j)^2
        c = -sum(r[i][j] * x[j] for j in range(i + 1, n))
        rad = _sqrt_floor(budget / d[i]) + 1
        lo, hi = floor(c) - rad, ceil(c) + rad
        if bound is not None:
            lo, hi = max(lo, -bound), min(hi, bound)
        for xi in range(lo, hi + 1):
            t = d[i] * (xi - c) ** 2
            if t > budget:
                continue
            x[i] = xi
            if i == 0:
                if budget - t == 0:
                    out.append(tuple(x))
            else:
                rec(i - 1, budget - t)
        x[i] = 0

    if n == 0:
        return [()] if norm == 0 else []
    rec(n - 1, Fraction(norm))
    return out


def enumerate_vectors_of_square(lat, s, bound=None):
    """All v with <v, v> == s (and |v_i| <= bound if given), sorted.

    For a definite lattice the bound may be omitted and the full finite set
    is returned. Indefinite or degenerate lattices require a bound.
    """
    _require_integral(lat)
    sig = signature(lat)
    n = lat.rank
    if sig.positive == n or sig.negative == n:
        sign = 1 if sig.positive == n else -1
        if s * sign < 0 or (n == 0 and s != 0):
            return []
        a = [[sign * x for x in row] for row in lat.gram]
        return sorted(_definite_search(a, sign * s, bound))
    if bound is None:
        raise LatticeError("lattice is not definite; a coordinate bound is required")
    return sorted(box_search(lat, s, bound))


def box_search(lat, s, bound):
    """Brute-force scan of the box |v_i| <= bound."""
    g = lat.gram
    out = []
    for v in itertools.product(range(-bound, bound + 1), repeat=lat.rank):
        if sum(v[i] * g[i][j] * v[j] for i in range(lat.rank) for j in range(lat.rank) if v[i] and v[j]) == s:
            out.append(v)
    return out
