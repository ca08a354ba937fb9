"""Hermite and Smith normal forms over the integers, with unimodular transforms.

Everything works on Python ints so entries can grow without bound.
"""

from ._linalg import identity, matvec, transpose


def xgcd(a, b):
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _combine(rows, i, j, c):
    # unimodular 2x2 step: afterwards rows[j][c] == 0 and rows[i][c] == gcd
    a, b = rows[i][c], rows[j][c]
    g, x, y = xgcd(a, b)
    ri, rj = rows[i], rows[j]
    rows[i] = [x * p + y * q for p, q in zip(ri, rj)]
    rows[j] = [(-b // g) * p + (a // g) * q for p, q in zip(ri, rj)]


def hermite(m, transform=False):
    """Row-style Hermite normal form H = U*m.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    Zero rows are kept at the bottom so H has the shape of m. With
    ``transform=True`` returns ``(H, U)`` where U is unimodular.
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    # carry U along as extra columns
    rows = [list(r) + [int(i == j) for j in range(nrows)] for i, r in enumerate(m)]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = [i for i in range(r, nrows) if rows[i][c] != 0]
        if not nz:
            continue
        if nz[0] != r:
            rows[r], rows[nz[0]] = rows[nz[0]], rows[r]
        for i in range(r + 1, nrows):
            if rows[i][c] != 0:
                _combine(rows, r, i, c)
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        p = rows[r][c]
        for i in range(r):
            q = rows[i][c] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
        r += 1
    h = tuple(tuple(row[:ncols]) for row in rows)
    if transform:
        return h, tuple(tuple(row[ncols:]) for row in rows)
    return h


def hermite_basis(vectors):
    """Canonical HNF basis (nonzero rows) of the Z-span of integer vectors."""
    if not vectors:
        return ()
    return tuple(row for row in hermite(vectors) if any(row))


def integer_kernel(a, ncols=None):
    """Saturated integer basis of {x : a*x = 0}, in canonical HNF order."""
    n = len(a[0]) if a else ncols
    if n is None:
        raise ValueError("cannot infer column count of an empty matrix")
    if not a:
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    h, u = hermite(transpose(a), transform=True)
    kern = [u[i] for i, row in enumerate(h) if not any(row)]
    return hermite_basis(kern)


def smith(m):
    """Smith normal form with transforms: returns (D, U, V) with U*m*V == D.

    D is diagonal with non-negative entries d1 | d2 | ...; U and V are
    unimodular.
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    a = [list(r) for r in m]
    u = [list(r) for r in identity(nrows)]
    v = [list(r) for r in identity(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(nrows, ncols)):
        while True:
            cands = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
            if not cands:
                break
            _, pi, pj = min(cands)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < nrows and t < ncols and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    freeze = lambda mat: tuple(tuple(r) for r in mat)  # noqa: E731
    return freeze(a), freeze(u), freeze(v)


def elementary_divisors(m):
    """Nonzero diagonal of the Smith form, in divisibility order."""
    d, _, _ = smith(m)
    return tuple(d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i])


def solve_integer(a, b):
    """One integer solution x of a*x = b, or None if there is none."""
    d, u, v = smith(a)
    ub = matvec(u, b)
    ncols = len(a[0])
    y = [0] * ncols
    for i, val in enumerate(ub):
        di = d[i][i] if i < ncols else 0
        if di == 0:
            if val != 0:
                return None
        elif val % di:
            return None
        else:
            y[i] = val // di
    return matvec(v, y)
