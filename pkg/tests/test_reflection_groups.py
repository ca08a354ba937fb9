import pytest

from helpers import admissible_vectors, random_reflection_product, random_unimodular, rng, unit
from surfacelattice import _linalg as la
from surfacelattice.dynkin import DIAGRAM_LAMBDA, DYNKIN_E8, diagonal, direct_sum, e8, hyperbolic_plane
from surfacelattice.elliptic import build_delta_model, build_X1_minus_nf, SurfaceSpec
from surfacelattice.enumeration import enumerate_vectors_of_square
from surfacelattice.factorization import factor_into_reflections
from surfacelattice.lattice import Isometry, Lattice, LatticeError, diagonalize, reflect, spinor_norm, square
from surfacelattice.reflection_groups import (
    DeltaSet,
    NotInGroup,
    check_ebeling,
    check_semidefinite_lemma,
    find_lambda_diagram,
    orbit_closure,
    spans,
    unit_edge_connected,
    word_in_root_reflections,
)

E8 = e8()
SIMPLE = [unit(8, i) for i in range(8)]


def test_delta_set_validation():
    with pytest.raises(LatticeError):
        DeltaSet(E8, [SIMPLE[0], SIMPLE[0]])
    with pytest.raises(LatticeError):
        DeltaSet(E8, [tuple(a + b for a, b in zip(SIMPLE[0], SIMPLE[1]))])  # square -2-2+0 = -4


def test_orbit_of_simple_root_is_all_roots():
    orbit = orbit_closure(DeltaSet(E8, SIMPLE), [SIMPLE[0]])
    assert len(orbit) == 240
    assert orbit == set(enumerate_vectors_of_square(E8, -2))


def test_orbit_small_cases():
    v = SIMPLE[2]
    assert orbit_closure(DeltaSet(E8, [v]), [v]) == {v, tuple(-x for x in v)}
    assert orbit_closure(DeltaSet(E8, []), [v, SIMPLE[3]]) == {v, SIMPLE[3]}


def test_orbit_indefinite_needs_bound_and_stays_inside():
    u = hyperbolic_plane()
    lat = direct_sum(u, diagonal(-2))
    delta = DeltaSet(lat, [(1, -1, 0), (0, 0, 1), (1, 0, 1)])
    with pytest.raises(LatticeError):
        orbit_closure(delta, [(1, -1, 0)])
    orbit = orbit_closure(delta, [(1, -1, 0)], bound=3)
    roots = set(enumerate_vectors_of_square(lat, -2, bound=3))
    assert orbit <= roots


def test_unit_edge_connected_examples():
    assert unit_edge_connected(DeltaSet(E8, SIMPLE))
    assert not unit_edge_connected(DeltaSet(diagonal(-2, -2), [(1, 0), (0, 1)]))
    lat, delta, _ = build_X1_minus_nf(1)
    assert unit_edge_connected(delta)
    with pytest.raises(LatticeError):
        unit_edge_connected(DeltaSet(E8, []))


def test_lambda_diagram_examples():
    assert find_lambda_diagram(DeltaSet(E8, SIMPLE)) is None
    # planted: DIAGRAM_LAMBDA as a gram block, plus two junk roots
    n = 8
    g = [[0] * n for _ in range(n)]
    for i in range(6):
        for j in range(6):
            g[i][j] = DIAGRAM_LAMBDA[i][j]
    g[6][6] = g[7][7] = -2
    g[6][0] = g[0][6] = 1
    lat = Lattice(g)
    delta = DeltaSet(lat, [unit(n, i) for i in range(n)])
    assert find_lambda_diagram(delta) == (0, 1, 2, 3, 4, 5)


def test_lambda_witness_satisfies_every_entry():
    m = build_delta_model(SurfaceSpec(1, 1))
    wit = find_lambda_diagram(m.delta)
    assert tuple(m.delta.names[i] for i in wit) == ("gamma1", "eps1", "eps3", "beta8", "eps2", "delta1")
    from surfacelattice.lattice import pair

    for a in range(6):
        for b in range(6):
            assert pair(m.lattice, m.delta.vectors[wit[a]], m.delta.vectors[wit[b]]) == DIAGRAM_LAMBDA[a][b]


def test_check_ebeling_examples():
    m = build_delta_model(SurfaceSpec(1, 1))
    rep = check_ebeling(m.lattice, m.delta)
    assert rep.spans and rep.orbit_connected and rep.diagram_witness and rep.conclusion_applicable
    assert "criterion-based" in rep.notes
    rep = check_ebeling(E8, DeltaSet(E8, [SIMPLE[0]]))
    assert not rep.spans and not rep.conclusion_applicable
    rep = check_ebeling(E8, DeltaSet(E8, SIMPLE))
    assert rep.spans and rep.orbit_connected and rep.diagram_witness is None and not rep.conclusion_applicable
    assert set(rep.to_dict()) >= {"spans", "orbit_connected", "diagram_witness", "conclusion_applicable", "notes"}


def test_check_ebeling_rejects_odd_lattice():
    lat = diagonal(1, -2)
    with pytest.raises(LatticeError):
        check_ebeling(lat, DeltaSet(lat, [(0, 1)]))


def test_spans_is_monotone():
    r = rng(1)
    roots = enumerate_vectors_of_square(E8, -2)
    for _ in range(20):
        vecs = r.sample(roots, r.randint(1, 10))
        before = spans(E8, vecs)
        after = spans(E8, vecs + r.sample(roots, 3))
        assert after or not before


def test_semidefinite_lemma_on_rational_model():
    for n in (0, 1, 2):
        lat, delta, _ = build_X1_minus_nf(n)
        e_basis = [unit(lat.rank, i) for i in range(8)]
        rep = check_semidefinite_lemma(lat, delta, e_basis, samples=2)
        assert rep.spans and rep.roots_single_orbit and rep.isometries_generated and rep.passed


def test_semidefinite_lemma_failures():
    lat, delta, _ = build_X1_minus_nf(1)
    no_alpha = DeltaSet(lat, [v for v, name in zip(delta.vectors, delta.names) if name.startswith("beta")])
    rep = check_semidefinite_lemma(lat, no_alpha, [unit(lat.rank, i) for i in range(8)], samples=1)
    assert not rep.spans and not rep.passed
    u = hyperbolic_plane()
    rep = check_semidefinite_lemma(u, DeltaSet(u, [(1, -1)]), [(1, 0), (0, 1)])
    assert not rep.roots_single_orbit and any("(ii)" in n for n in rep.notes)
    with pytest.raises(LatticeError):
        check_semidefinite_lemma(lat, delta, [unit(lat.rank, i) for i in range(7)])


def test_factor_examples():
    u = hyperbolic_plane()
    assert len(factor_into_reflections(u, Isometry.identity(2))) == 0
    s = reflect(u, (1, -1))
    w = factor_into_reflections(u, s)
    assert len(w) == 1 and w.matrix(u.gram) == s.matrix
    w = factor_into_reflections(u, Isometry.negation(2))
    assert len(w) == 2
    assert sorted(square(u, v) > 0 for v in w.factors) == [False, True]
    with pytest.raises(LatticeError):
        factor_into_reflections(Lattice(((0,),)), Isometry.identity(1))


def _alternative_basis(lat, seed):
    u = random_unimodular(lat.rank, rng(seed))
    g2 = la.matmul(la.matmul(la.transpose(u), lat.gram), u)
    basis, _ = diagonalize(g2)
    return [tuple(la.matvec(u, b)) for b in basis]


@pytest.mark.parametrize(
    "lat",
    [direct_sum(hyperbolic_plane(), diagonal(-2, 2)), diagonal(1, 1, -1, -1, -1), direct_sum(hyperbolic_plane(), e8())],
    ids=["U+<-2>+<2>", "2<1>+3<-1>", "U+(-E8)"],
)
def test_two_factorizations_agree(lat):
    r = rng(2)
    pool = admissible_vectors(lat, max_support=2)
    for seed in range(35):
        g, _ = random_reflection_product(lat, pool, r, r.randint(1, 7))
        w1 = factor_into_reflections(lat, g)
        w2 = factor_into_reflections(lat, g, basis=_alternative_basis(lat, seed))
        assert w1.matrix(lat.gram) == g.matrix == w2.matrix(lat.gram)
        assert spinor_norm(lat, g, w1) == spinor_norm(lat, g, w2)


def test_word_in_root_reflections_examples():
    w = word_in_root_reflections(E8, Isometry.negation(8))
    assert len(w) == 120
    assert w.matrix(DYNKIN_E8) == Isometry.negation(8).matrix
    assert len(word_in_root_reflections(E8, Isometry.identity(8))) == 0
    s = reflect(E8, SIMPLE[4])
    w = word_in_root_reflections(E8, s)
    assert len(w) == 1 and w.matrix(DYNKIN_E8) == s.matrix


def test_word_in_root_reflections_random_products():
    r = rng(4)
    roots = enumerate_vectors_of_square(E8, -2)
    for _ in range(10):
        g, _ = random_reflection_product(E8, roots, r, r.randint(2, 15))
        w = word_in_root_reflections(E8, g, roots)
        assert w.matrix(DYNKIN_E8) == g.matrix


def test_word_in_root_reflections_not_in_group():
    a2 = Lattice(((-2, 1), (1, -2)))
    with pytest.raises(NotInGroup):
        word_in_root_reflections(a2, Isometry.negation(2))
    with pytest.raises(LatticeError):
        word_in_root_reflections(hyperbolic_plane(), Isometry.identity(2))
