"""Writing an isometry as a product of reflections over Q."""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .lattice import Isometry, LatticeError, diagonalize, reflection_matrix


@dataclass(frozen=True)
class ReflectionWord:
    """Anisotropic vectors v_1..v_t with g = s_{v_1} s_{v_2} ... s_{v_t}.

    Vectors are stored as primitive integer vectors; scaling does not change
    a reflection.
    """

    factors: tuple = ()

    def __len__(self):
        return len(self.factors)

    def matrix(self, gram):
        """Compose the reflections (rational arithmetic, exact)."""
        out = la.identity(len(gram))
        for v in self.factors:
            out = la.matmul(out, reflection_matrix(gram, v))
        return la.normalize(out)


def _apply(m, x):
    return [sum(a * b for a, b in zip(row, x)) for row in m]


def factor_into_reflections(lat, g, basis=None):
    """Cartan-Dieudonne factorization of g into at most 2*rank reflections.

    Walks an orthogonal basis e_1..e_n of L (x) Q. With h = s_t...s_1 g fixing
    e_1..e_{i-1}, the vector y = h(e_i) - e_i is orthogonal to those, and
    s_y h fixes e_i when <y,y> != 0; when y is isotropic the pair
    s_{e_i} s_{h(e_i)+e_i} does the same. ``basis`` optionally replaces the
    default orthogonal basis (any rational orthogonal basis works, which gives
    genuinely different factorizations of the same g).
    """
    gram = lat.gram
    if lat.rank and la.det(gram) == 0:
        raise LatticeError("cannot factor on a degenerate lattice")
    m = g.matrix if isinstance(g, Isometry) else g
    if basis is None:
        basis, _ = diagonalize(gram)
    basis = [list(map(Fraction, b)) for b in basis]

    def q(u, v):
        return sum(a * b for a, b in zip(u, _apply(gram, v)))

    h = [list(map(Fraction, row)) for row in m]
    word = []
    n = lat.rank

    def push(y):
        # h <- s_y h = h - (2 / Q(y)) y (y^T G h), a rank-one update
        word.append(la.primitive(y))
        gy = _apply(gram, y)
        c = Fraction(2) / sum(a * b for a, b in zip(y, gy))
        r = [sum(gy[i] * h[i][j] for i in range(n) if gy[i]) for j in range(n)]
        for i in range(n):
            if y[i]:
                t = c * y[i]
                row = h[i]
                for j in range(n):
                    if r[j]:
                        row[j] -= t * r[j]

    for e in basis:
        he = _apply(h, e)
        y = [a - b for a, b in zip(he, e)]
        if not any(y):
            continue
        if q(y, y) != 0:
            push(y)
        else:
            push([a + b for a, b in zip(he, e)])
            push(e)
    if la.normalize(tuple(map(tuple, h))) != la.identity(lat.rank):
        raise AssertionError("reflection factorization did not terminate at the identity")
    # h_final = s_t ... s_1 g = id, so g = s_1 ... s_t
    return ReflectionWord(tuple(word))
