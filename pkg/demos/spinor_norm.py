"""Spinor norms from two different reflection factorizations."""

import random

from surfacelattice import Isometry, direct_sum, e8, factor_into_reflections, hyperbolic_plane, reflect, spinor_norm
from surfacelattice.lattice import diagonalize

lat = direct_sum(hyperbolic_plane(), e8())
rng = random.Random(1)
vectors = [(1, 1) + (0,) * 8, (1, -1) + (0,) * 8] + [(0, 0) + tuple(int(i == j) for j in range(8)) for i in range(8)]

g = Isometry.identity(lat.rank)
for _ in range(9):
    g = g @ reflect(lat, rng.choice(vectors))

w1 = factor_into_reflections(lat, g)
# a second orthogonal basis, from a change of coordinates
u = [[int(i == j) + (j == i + 1) for j in range(10)] for i in range(10)]
gram_u = [[sum(u[a][i] * lat.gram[a][b] * u[b][j] for a in range(10) for b in range(10)) for j in range(10)] for i in range(10)]
basis = [tuple(sum(u[i][k] * b[k] for k in range(10)) for i in range(10)) for b in diagonalize(gram_u)[0]]
w2 = factor_into_reflections(lat, g, basis=basis)
print("factor lengths:", len(w1), len(w2))
print("both reproduce g:", w1.matrix(lat.gram) == g.matrix == w2.matrix(lat.gram))
print("spinor norms:", spinor_norm(lat, g, w1), spinor_norm(lat, g, w2))
print("-id:", spinor_norm(lat, Isometry.negation(lat.rank)))
