"""Lattices with a symmetric bilinear form, and their isometries.

A lattice is stored by its Gram matrix in a fixed basis; vectors are
coordinate tuples in that basis and an isometry is an integer matrix whose
columns are the images of the basis vectors. All arithmetic is exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import _linalg as la
from . import scalar
from .normal_forms import integer_kernel, smith


class LatticeError(ValueError):
    """Raised when an operation's precondition on the lattice fails."""


@dataclass(frozen=True)
class Lattice:
    gram: tuple
    label: str = ""

    def __post_init__(self):
        g = tuple(tuple(scalar.normalize(x) for x in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise LatticeError("gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if scalar.normalize(g[i][j] - g[j][i]) != 0:
                    raise LatticeError(f"gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self):
        return len(self.gram)

    @property
    def is_integral(self):
        """True when no entry involves a parameter."""
        return all(isinstance(x, int) for row in self.gram for x in row)

    @property
    def is_even(self):
        return all(_poly_even(self.gram[i][i]) for i in range(self.rank))

    @property
    def determinant(self):
        _require_integral(self)
        return la.det(self.gram)

    @property
    def is_unimodular(self):
        return self.is_integral and abs(self.determinant) == 1

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<Lattice{name} rank={self.rank}>"


def _poly_even(x):
    if isinstance(x, int):
        return x % 2 == 0
    import sympy

    poly = sympy.Poly(x, *sorted(x.free_symbols, key=str))
    return all(int(c) % 2 == 0 for c in poly.coeffs())


def _require_integral(lat):
    if not lat.is_integral:
        raise LatticeError("operation needs an integer gram matrix (found symbolic entries)")


class Signature(NamedTuple):
    positive: int
    negative: int
    null: int


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group given by invariant factors d1 | d2 | ..."""

    invariant_factors: tuple = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in fs):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"{fs} is not a divisibility chain")
        object.__setattr__(self, "invariant_factors", fs)

    @classmethod
    def from_relations(cls, relations, ngens=None):
        """Z^n modulo the row span of ``relations``; must be finite."""
        n = ngens if ngens is not None else len(relations[0])
        if not relations:
            if n:
                raise ValueError("group is infinite")
            return cls(())
        d, _, _ = smith(relations)
        diag = [d[i][i] if i < len(d) else 0 for i in range(n)]
        if any(x == 0 for x in diag):
            raise ValueError("group is infinite")
        return cls(tuple(x for x in diag if x > 1))

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def is_trivial(self):
        return not self.invariant_factors

    def __str__(self):
        if self.is_trivial:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class Isometry:
    """Integer matrix acting on coordinate vectors; columns are basis images."""

    matrix: tuple = field(default=())

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if any(len(row) != len(m) for row in m):
            raise LatticeError("isometry matrix must be square")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def checked(cls, lat, matrix):
        g = cls(matrix)
        if not is_isometry(lat, g.matrix):
            raise LatticeError("matrix does not preserve the pairing")
        return g

    @classmethod
    def identity(cls, n):
        return cls(la.identity(n))

    @classmethod
    def negation(cls, n):
        return cls(la.scale(-1, la.identity(n)))

    @property
    def rank(self):
        return len(self.matrix)

    def __call__(self, x):
        return la.matvec(self.matrix, x)

    def __matmul__(self, other):
        return Isometry(la.matmul(self.matrix, other.matrix))

    def inverse(self):
        inv = la.inverse(self.matrix)
        if not la.is_integral(inv):
            raise LatticeError("matrix is not unimodular")
        return Isometry(inv)

    @property
    def is_identity(self):
        return self.matrix == la.identity(self.rank)


def _check_vector(lat, x):
    if len(x) != lat.rank:
        raise LatticeError(f"vector of length {len(x)} does not fit a rank-{lat.rank} lattice")


def pair(lat, x, y):
    """Evaluate <x, y> = x^T G y."""
    _check_vector(lat, x)
    _check_vector(lat, y)
    total = 0
    for xi, row in zip(x, lat.gram):
        if xi == 0:
            continue
        total += xi * sum(g * yj for g, yj in zip(row, y) if yj != 0)
    if isinstance(total, Fraction):
        return total.numerator if total.denominator == 1 else total
    return scalar.normalize(total) if not isinstance(total, int) else total


def square(lat, x):
    return pair(lat, x, x)


def pairing_matrix(lat, vectors):
    """Gram matrix of a list of vectors."""
    gv = [la.matvec(lat.gram, v) for v in vectors]
    out = []
    for u in vectors:
        row = []
        for w in gv:
            x = la.dot(u, w)
            row.append(x if isinstance(x, int) else scalar.normalize(x))
        out.append(tuple(row))
    return tuple(out)


def sublattice(lat, vectors, label=""):
    """The lattice spanned by ``vectors`` with the restricted pairing."""
    return Lattice(pairing_matrix(lat, vectors), label=label)


def is_isometry(lat, m):
    _require_integral(lat)
    if len(m) != lat.rank:
        return False
    return la.matmul(la.matmul(la.transpose(m), lat.gram), m) == lat.gram


def radical(lat):
    """Saturated integer basis of the radical {x : <x, y> = 0 for all y}."""
    _require_integral(lat)
    if lat.rank == 0:
        return ()
    return integer_kernel(lat.gram)


def diagonalize(gram):
    """Rational congruence diagonalization.

    Returns ``(basis, diag)``: ``basis`` is a list of rational column vectors
    b_i (in the lattice's coordinates) with <b_i, b_j> = 0 for i != j and
    <b_i, b_i> = diag[i]. Zero diagonal entries come last and span the
    radical over Q.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    basis = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]

    def add(dst, src, f):
        # b_dst += f * b_src, as a congruence on a
        basis[dst] = [x + f * y for x, y in zip(basis[dst], basis[src])]
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        for row in a:
            row[dst] += f * row[src]

    def swap(i, j):
        basis[i], basis[j] = basis[j], basis[i]
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            add(i, j, Fraction(1))
            if a[i][i] == 0:
                # a_ii + 2 a_ij + a_jj with a_jj == 0 can only vanish if a_ij == 0
                raise AssertionError("diagonalization pivot fix failed")
            piv = i
        if piv != k:
            swap(k, piv)
        for j in range(k + 1, n):
            if a[k][j] != 0:
                add(j, k, -a[k][j] / a[k][k])
    diag = [a[i][i] for i in range(n)]
    order = [i for i in range(n) if diag[i] != 0] + [i for i in range(n) if diag[i] == 0]
    return [tuple(basis[i]) for i in order], tuple(diag[i] for i in order)


def signature(lat):
    """(positive, negative, null) counts of a rational diagonalization."""
    _require_integral(lat)
    _, diag = diagonalize(lat.gram)
    return Signature(
        sum(1 for d in diag if d > 0),
        sum(1 for d in diag if d < 0),
        sum(1 for d in diag if d == 0),
    )


def radical_splitting(lat):
    """Return (complement, radical) integer bases whose union is a Z-basis."""
    rad = radical(lat)
    n = lat.rank
    if not rad:
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), ()
    _, _, v = smith(rad)
    vinv = la.inverse(v)
    k = len(rad)
    return tuple(tuple(r) for r in vinv[k:]), rad


def quotient_by_radical(lat):
    """The nondegenerate lattice L / rad(L) and the coordinate projection.

    The projection is an integer matrix P with P*x giving the coordinates of
    the class of x in the returned lattice.
    """
    comp, rad = radical_splitting(lat)
    q = sublattice(lat, comp, label=f"{lat.label}/rad" if lat.label else "")
    cols = list(comp) + list(rad)
    full = la.from_columns(cols, lat.rank)
    coords = la.inverse(full)
    proj = tuple(tuple(int(x) for x in row) for row in coords[: len(comp)])
    return q, proj


def orthogonal_complement(lat, vectors):
    """Saturated integer basis of {x : <x, s> = 0 for all s in vectors}."""
    _require_integral(lat)
    if not vectors:
        return tuple(tuple(int(i == j) for j in range(lat.rank)) for i in range(lat.rank))
    rows = [la.matvec(lat.gram, s) for s in vectors]
    return integer_kernel(rows, lat.rank)


def _require_nondegenerate(lat):
    _require_integral(lat)
    if lat.rank and lat.determinant == 0:
        raise LatticeError("lattice is degenerate; pass its quotient by the radical")


def discriminant_group(lat):
    """Hom(L, Z) / L as invariant factors of the Smith form of the gram."""
    _require_nondegenerate(lat)
    if lat.rank == 0:
        return FiniteAbelianGroup(())
    d, _, _ = smith(lat.gram)
    return FiniteAbelianGroup(tuple(d[i][i] for i in range(lat.rank) if d[i][i] > 1))


def discriminant_generators(lat):
    """Rational vectors of L* lifting generators of the discriminant group.

    From U*G*V = D the dual lattice G^-1 Z^n equals V D^-1 Z^n, so the
    columns of V scaled by 1/d_i (d_i > 1) generate L*/L.
    """
    _require_nondegenerate(lat)
    d, _, v = smith(lat.gram)
    gens = []
    for i in range(lat.rank):
        if d[i][i] > 1:
            gens.append(tuple(Fraction(v[r][i], d[i][i]) for r in range(lat.rank)))
    return gens


def acts_trivially_on_discriminant(lat, g):
    """True iff g(y) - y lies in L for every lifted generator y of L*/L."""
    m = g.matrix if isinstance(g, Isometry) else g
    for y in discriminant_generators(lat):
        diff = [a - b for a, b in zip(la.matvec(m, y), y)]
        if any(Fraction(x).denominator != 1 for x in diff):
            return False
    return True


def reflection_matrix(gram, v):
    """Matrix of x -> x - (2<x,v>/<v,v>) v, possibly rational."""
    gv = la.matvec(gram, v)
    q = la.dot(v, gv)
    if q == 0:
        raise LatticeError("cannot reflect in an isotropic vector")
    n = len(v)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            val = int(i == j) - Fraction(2 * gv[j] * v[i]) / q
            row.append(val.numerator if val.denominator == 1 else val)
        out.append(tuple(row))
    return tuple(out)


def reflect(lat, v):
    """The integral reflection s_v as an Isometry."""
    _require_integral(lat)
    _check_vector(lat, v)
    m = reflection_matrix(lat.gram, v)
    if not la.is_integral(m):
        raise LatticeError(f"reflection in {tuple(v)} is not integral on this lattice")
    return Isometry(m)


def spinor_norm(lat, g, word=None):
    """Real spinor norm, normalized so reflections in negative vectors give +1.

    Factors g into rational reflections (unless ``word`` is supplied) and
    multiplies sign(-<v,v>) over the factors.
    """
    from .factorization import factor_into_reflections

    _require_nondegenerate(lat)
    m = g.matrix if isinstance(g, Isometry) else g
    if not is_isometry(lat, m):
        raise LatticeError("input is not an isometry of the lattice")
    if word is None:
        word = factor_into_reflections(lat, Isometry(m))
    sign = 1
    for v in word.factors:
        if square(lat, v) > 0:
            sign = -sign
    return sign


def positive_orientation_character(lat, g, diagonalization=None):
    """Sign of det(P+ g | V+) for a positive subspace V+ of a diagonal basis.

    P+ projects along the negative subspace. For a nondegenerate form this
    determinant never vanishes, and its sign does not depend on the choice
    of diagonal basis.
    """
    _require_nondegenerate(lat)
    m = g.matrix if isinstance(g, Isometry) else g
    basis, diag = diagonalization or diagonalize(lat.gram)
    pos = [i for i, d in enumerate(diag) if d > 0]
    if not pos:
        raise LatticeError("lattice has no positive directions")
    pmat = la.from_columns(basis, lat.rank)
    coords = la.matmul(la.inverse(pmat), la.matmul(m, pmat))
    block = [[coords[i][j] for j in pos] for i in pos]
    d = la.det(block)
    if d == 0:
        raise AssertionError("projected action on V+ is singular")
    return 1 if d > 0 else -1
