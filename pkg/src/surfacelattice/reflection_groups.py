"""Groups generated by reflections in (-2)-vectors, and checks of the
standard criteria for when such a group is as large as possible.
"""

import random
from dataclasses import asdict, dataclass, field

import networkx as nx

from . import _linalg as la
from .dynkin import DIAGRAM_LAMBDA
from .enumeration import enumerate_vectors_of_square
from .factorization import ReflectionWord, factor_into_reflections  # noqa: F401  (re-export)
from .lattice import (
    Isometry,
    LatticeError,
    _require_integral,
    pair,
    pairing_matrix,
    radical,
    reflect,
    signature,
    square,
    sublattice,
)
from .normal_forms import hermite_basis


class NotInGroup(LatticeError):
    """The isometry is not a product of reflections in the available roots."""


@dataclass(frozen=True)
class DeltaSet:
    lattice: object
    vectors: tuple
    names: tuple = ()

    def __post_init__(self):
        vecs = tuple(tuple(v) for v in self.vectors)
        if len(set(vecs)) != len(vecs):
            raise LatticeError("vectors of a delta set must be pairwise distinct")
        if self.lattice.is_integral:
            for v in vecs:
                if square(self.lattice, v) != -2:
                    raise LatticeError(f"{v} does not have square -2")
        if self.names and len(self.names) != len(vecs):
            raise LatticeError("names and vectors differ in length")
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "names", tuple(self.names))

    def __len__(self):
        return len(self.vectors)

    def name(self, i):
        return self.names[i] if self.names else str(i)


def _is_definite(lat):
    sig = signature(lat)
    return sig.positive == lat.rank or sig.negative == lat.rank


def _reflect_root(lat, v, x):
    # s_v(x) for a (-2)-vector v
    c = pair(lat, x, v)
    return tuple(a + c * b for a, b in zip(x, v)) if c else tuple(x)


def orbit_closure(delta, seeds, bound=None):
    """Closure of ``seeds`` under the reflections in delta's vectors.

    Breadth-first with a sorted frontier. Vectors with a coordinate above
    ``bound`` are dropped. Without a bound the lattice must be definite.
    """
    lat = delta.lattice
    _require_integral(lat)
    if bound is None and delta.vectors and not _is_definite(lat):
        raise LatticeError("orbit of a non-definite lattice needs a coordinate bound")
    seen = {tuple(s) for s in seeds}
    frontier = sorted(seen)
    while frontier:
        nxt = set()
        for x in frontier:
            for v in delta.vectors:
                y = _reflect_root(lat, v, x)
                if bound is not None and max(map(abs, y), default=0) > bound:
                    continue
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        frontier = sorted(nxt)
    return seen


def unit_edge_graph(delta):
    g = nx.Graph()
    g.add_nodes_from(range(len(delta)))
    pm = pairing_matrix(delta.lattice, delta.vectors)
    for i in range(len(delta)):
        for j in range(i + 1, len(delta)):
            if abs(pm[i][j]) == 1:
                g.add_edge(i, j)
    return g


def unit_edge_connected(delta):
    """Are all of delta's vectors joined by a path of pairings +-1?

    Two roots pairing to +-1 are conjugate under the reflection group, so a
    connected graph puts all of delta into a single orbit.
    """
    if not len(delta):
        raise LatticeError("empty delta set")
    return nx.is_connected(unit_edge_graph(delta))


def find_lambda_diagram(delta):
    """First 6-tuple of indices (in lambda order) realizing DIAGRAM_LAMBDA.

    Every pairing must match exactly, zeros included. Returns None if there
    is no such configuration.
    """
    n = len(delta)
    if n < 6:
        return None
    pm = pairing_matrix(delta.lattice, delta.vectors)
    target = DIAGRAM_LAMBDA
    chosen = []

    def extend(k):
        if k == 6:
            return True
        for c in range(n):
            if c in chosen or pm[c][c] != target[k][k]:
                continue
            if all(pm[c][chosen[a]] == target[k][a] for a in range(k)):
                chosen.append(c)
                if extend(k + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        return None
    witness = tuple(chosen)
    for a in range(6):
        for b in range(6):
            assert pm[witness[a]][witness[b]] == target[a][b]
    return witness


def spans(lat, vectors):
    """Do the vectors generate the whole lattice Z^rank?"""
    if not vectors:
        return lat.rank == 0
    h = hermite_basis(vectors)
    return h == la.identity(lat.rank)


@dataclass
class EbelingReport:
    spans: bool
    orbit_connected: bool
    diagram_witness: tuple = None
    conclusion_applicable: bool = False
    notes: str = ""
    witness_names: tuple = ()

    def to_dict(self):
        d = asdict(self)
        d["diagram_witness"] = list(self.diagram_witness) if self.diagram_witness else None
        d["witness_names"] = list(self.witness_names)
        return d


def check_ebeling(lat, delta):
    """Check the three hypotheses of Ebeling's generation theorem.

    (i) delta spans L; (ii) delta lies in one orbit, tested through the
    sufficient unit-edge criterion; (iii) six elements of delta realize
    DIAGRAM_LAMBDA.
    """
    _require_integral(lat)
    if not lat.is_even:
        raise LatticeError("Ebeling's criterion needs an even lattice")
    if delta.lattice != lat:
        raise LatticeError("delta set lives on a different lattice")
    sp = spans(lat, delta.vectors)
    conn = unit_edge_connected(delta)
    wit = find_lambda_diagram(delta)
    ok = sp and conn and wit is not None
    notes = ["orbit hypothesis: criterion-based (connected by pairings +-1)"]
    if not conn:
        notes.append("criterion fails; this is inconclusive, not a refutation")
    if ok:
        notes.append(
            "conclusion: the reflection group equals the isometries of spinor norm one "
            "acting trivially on the discriminant group, and its orbit of delta is all (-2)-vectors"
        )
    names = tuple(delta.name(i) for i in wit) if wit else ()
    return EbelingReport(sp, conn, wit, ok, "; ".join(notes), names)


@dataclass
class SemidefiniteReport:
    decomposes: bool
    spans: bool
    roots_single_orbit: bool
    isometries_generated: bool
    passed: bool = False
    notes: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def _coordinates_in(basis_rows, x):
    mat = la.from_columns(basis_rows, len(x))
    return la.matvec(la.inverse(mat), x)


def check_semidefinite_lemma(lat, delta, summand, samples=5, seed=0):
    """Check the hypotheses of the radical-plus-unimodular-summand lemma.

    ``summand`` is an integer basis of a unimodular E with L = rad(L) + E.
    (i) delta spans L. (ii) delta intersected with E spans E, is unit-edge
    connected, and (E definite) its orbit is every (-2)-vector of E.
    (iii) -id and ``samples`` random products of root reflections of E all
    factor through word_in_root_reflections.
    """
    _require_integral(lat)
    summand = tuple(tuple(v) for v in summand)
    rad = radical(lat)
    basis = list(summand) + list(rad)
    if len(basis) != lat.rank or la.det(la.from_columns(basis, lat.rank)) not in (1, -1):
        raise LatticeError("L is not the direct sum of its radical and the given summand")
    e_lat = sublattice(lat, summand, label="E")
    if abs(e_lat.determinant) != 1:
        raise LatticeError("summand is not unimodular")
    notes = []
    k = len(summand)
    in_e = []
    for v in delta.vectors:
        c = _coordinates_in(basis, v)
        if all(x == 0 for x in c[k:]):
            in_e.append(tuple(int(x) for x in c[:k]))
    sp = spans(lat, delta.vectors)
    if not sp:
        notes.append("(i) delta does not span L")
    roots_ok = False
    gen_ok = False
    if not in_e:
        notes.append("(ii) delta meets E in no vectors")
    else:
        de = DeltaSet(e_lat, in_e)
        if not spans(e_lat, in_e):
            notes.append("(ii) delta intersect E does not span E")
        elif not unit_edge_connected(de):
            notes.append("(ii) delta intersect E is not unit-edge connected")
        elif not _is_definite(e_lat):
            notes.append("(ii) E is indefinite; root set not finitely checkable")
        else:
            orbit = orbit_closure(de, in_e)
            roots = set(enumerate_vectors_of_square(e_lat, -2))
            roots_ok = orbit == roots
            if not roots_ok:
                notes.append("(ii) orbit of delta intersect E misses some (-2)-vectors of E")
        if roots_ok:
            rng = random.Random(seed)
            tests = [Isometry.negation(k)]
            rlist = sorted(roots)
            for _ in range(samples):
                g = Isometry.identity(k)
                for _ in range(rng.randint(1, 12)):
                    g = g @ reflect(e_lat, rng.choice(rlist))
                tests.append(g)
            gen_ok = True
            for g in tests:
                try:
                    word = word_in_root_reflections(e_lat, g)
                except NotInGroup:
                    gen_ok = False
                    notes.append("(iii) an isometry of E is not a product of root reflections")
                    break
                if word.matrix(e_lat.gram) != g.matrix:
                    raise AssertionError("root word does not reproduce the isometry")
    passed = sp and roots_ok and gen_ok
    return SemidefiniteReport(True, sp, roots_ok, gen_ok, passed, notes)


def word_in_root_reflections(lat, g, roots=None):
    """Write g as a product of reflections in (-2)-vectors by chamber descent.

    A generic vector w picks out positive and simple roots. Reflecting g(w)
    in a simple root on which it is negative lowers the number of positive
    roots it is negative on by one; when none is left, the accumulated
    product times g fixes w and must be the identity if g lies in the
    reflection group. Raises NotInGroup otherwise, or after a step budget of
    10 * |roots|.
    """
    _require_integral(lat)
    sig = signature(lat)
    if sig.negative != lat.rank:
        raise LatticeError("descent needs a negative definite lattice")
    m = g.matrix if isinstance(g, Isometry) else g
    n = lat.rank
    if m == la.identity(n):
        return ReflectionWord(())
    if roots is None:
        roots = enumerate_vectors_of_square(lat, -2)
    roots = sorted(tuple(r) for r in roots)
    if la.rank(la.sub(m, la.identity(n))) == 1:
        cols = [la.column(la.sub(m, la.identity(n)), j) for j in range(n)]
        r = la.primitive(next(c for c in cols if any(c)))
        if r in set(roots) and reflect(lat, r).matrix == m:
            return ReflectionWord((r,))
    if not roots:
        raise NotInGroup("lattice has no roots")

    def b(x, y):
        return -pair(lat, x, y)

    big = 2 * max(abs(x) for r in roots for x in la.matvec(lat.gram, r)) + 1
    w = tuple(big**i for i in range(n))
    positive = [r for r in roots if b(w, r) > 0]
    pos_set = set(positive)
    simple = [
        r for r in positive if not any(tuple(a - c for a, c in zip(r, p)) in pos_set for p in positive)
    ]
    v = la.matvec(m, w)
    word = []
    budget = 10 * len(roots)
    while True:
        s = next((s for s in simple if b(v, s) < 0), None)
        if s is None:
            break
        v = _reflect_root(lat, s, v)
        word.append(s)
        if len(word) > budget:
            raise NotInGroup("descent exceeded its step budget")
    h = m
    for s in word:
        h = la.matmul(reflect(lat, s).matrix, h)
    if h != la.identity(n):
        raise NotInGroup("descent ended at a nontrivial isometry fixing a chamber")
    return ReflectionWord(tuple(word))
