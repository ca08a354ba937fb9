"""Fixed Gram matrices: -E8, -E10, and the six-vertex test diagram.

Node labels (1-based, as b1..b8 in names): b2-b3-b4-b5-b6-b7-b8 is a chain,
b1 hangs off the trivalent node b4, and b8 ends the long arm, so it is the
node next to the affine vertex. The highest root ("long vector") therefore
pairs -1 with b8 and 0 with every other simple root.
"""

from .lattice import Lattice

E8_EDGES = ((1, 4), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8))

# coefficients of the highest root in the simple roots b1..b8
LONG_VECTOR = (3, 2, 4, 6, 5, 4, 3, 2)


def negative_dynkin_gram(n, edges):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for a, b in edges:
        g[a - 1][b - 1] = g[b - 1][a - 1] = 1
    return tuple(map(tuple, g))


DYNKIN_E8 = negative_dynkin_gram(8, E8_EDGES)

# b9 hangs off b8 and b10 off b9: the long arm grows to length 6 (T_{2,3,7})
E10_EDGES = E8_EDGES + ((8, 9), (9, 10))
DYNKIN_E10 = negative_dynkin_gram(10, E10_EDGES)

# lambda_1..lambda_6; pairs not listed must pair to 0
LAMBDA_EDGES = {
    (1, 2): 1,
    (2, 3): -2,
    (2, 4): 1,
    (2, 5): -2,
    (3, 4): 1,
    (3, 5): -2,
    (4, 5): 1,
    (5, 6): 1,
}


def _lambda_gram():
    g = [[0] * 6 for _ in range(6)]
    for i in range(6):
        g[i][i] = -2
    for (a, b), w in LAMBDA_EDGES.items():
        g[a - 1][b - 1] = g[b - 1][a - 1] = w
    return tuple(map(tuple, g))


DIAGRAM_LAMBDA = _lambda_gram()


def e8():
    return Lattice(DYNKIN_E8, label="-E8")


def e10():
    return Lattice(DYNKIN_E10, label="-E10")


def hyperbolic_plane():
    return Lattice(((0, 1), (1, 0)), label="U")


def diagonal(*entries, label=""):
    n = len(entries)
    return Lattice(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)), label=label)


def direct_sum(*lattices, label=""):
    n = sum(l.rank for l in lattices)
    g = [[0] * n for _ in range(n)]
    off = 0
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                g[off + i][off + j] = lat.gram[i][j]
        off += lat.rank
    return Lattice(tuple(map(tuple, g)), label=label or " + ".join(l.label or "?" for l in lattices))
