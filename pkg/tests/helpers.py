"""Shared generators for tests: random unimodular matrices, admissible
reflection vectors and random isometries built from them."""

import itertools
import random

from surfacelattice import _linalg as la
from surfacelattice.lattice import Isometry, LatticeError, reflect, square


def unit(n, i):
    return tuple(int(j == i) for j in range(n))


def random_unimodular(n, rng, steps=None):
    m = [list(r) for r in la.identity(n)]
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            m[i] = [-x for x in m[i]]
            continue
        c = rng.choice([-2, -1, 1, 2])
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return tuple(map(tuple, m))


def admissible_vectors(lat, squares=(-2, -1, 1, 2), max_support=2, bound=1, limit=None):
    """Sparse vectors whose reflection is integral, grouped by nothing, in a
    fixed order."""
    out = []
    coeffs = [c for a in range(1, bound + 1) for c in (a, -a)]
    for size in range(1, max_support + 1):
        for idx in itertools.combinations(range(lat.rank), size):
            for cs in itertools.product(coeffs, repeat=size):
                if cs[0] < 0:
                    continue
                v = [0] * lat.rank
                for i, c in zip(idx, cs):
                    v[i] = c
                v = tuple(v)
                if square(lat, v) not in squares:
                    continue
                try:
                    reflect(lat, v)
                except LatticeError:
                    continue
                out.append(v)
                if limit and len(out) >= limit:
                    return out
    return out


def random_reflection_product(lat, pool, rng, length):
    """(isometry, vectors used) for a product of ``length`` reflections."""
    g = Isometry.identity(lat.rank)
    used = []
    for _ in range(length):
        v = rng.choice(pool)
        g = g @ reflect(lat, v)
        used.append(v)
    return g, used


def expected_spinor(lat, used):
    sign = 1
    for v in used:
        if square(lat, v) > 0:
            sign = -sign
    return sign


def rng(seed=0):
    return random.Random(seed)
