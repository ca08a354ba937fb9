from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import admissible_vectors, random_reflection_product, random_unimodular, rng, unit
from surfacelattice import _linalg as la
from surfacelattice import scalar
from surfacelattice.dynkin import diagonal, direct_sum, e8, e10, hyperbolic_plane
from surfacelattice.factorization import factor_into_reflections
from surfacelattice.lattice import (
    FiniteAbelianGroup,
    Isometry,
    Lattice,
    LatticeError,
    acts_trivially_on_discriminant,
    diagonalize,
    discriminant_group,
    is_isometry,
    orthogonal_complement,
    pair,
    positive_orientation_character,
    quotient_by_radical,
    radical,
    reflect,
    signature,
    spinor_norm,
    square,
)

U = hyperbolic_plane()


def congruent(lat, u):
    return Lattice(la.matmul(la.matmul(la.transpose(u), lat.gram), u))


def small_grams(n_max=5):
    def build(n):
        entries = st.lists(st.integers(-3, 3), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2)

        def sym(vals):
            g = [[0] * n for _ in range(n)]
            it = iter(vals)
            for i in range(n):
                for j in range(i, n):
                    g[i][j] = g[j][i] = next(it)
            return Lattice(g)

        return entries.map(sym)

    return st.integers(1, n_max).flatmap(build)


def test_pair_examples():
    assert pair(U, (1, 0), (0, 1)) == 1
    assert pair(e8(), (0,) * 8, unit(8, 3)) == 0
    for i in range(8):
        assert square(e8(), unit(8, i)) == -2


def test_pair_dimension_mismatch():
    with pytest.raises(LatticeError):
        pair(U, (1, 0, 0), (1, 0))


def test_symbolic_pairing():
    c, d = scalar.symbols("c d")
    lat = Lattice(((-2, c), (c, d)))
    assert scalar.to_text(pair(lat, (1, 1), (1, 1))) == "2*c + d - 2"
    assert not lat.is_integral
    with pytest.raises(LatticeError):
        radical(lat)


def test_gram_must_be_symmetric():
    with pytest.raises(LatticeError):
        Lattice(((0, 1), (2, 0)))


@given(small_grams(), st.data())
def test_pair_symmetric(lat, data):
    x = data.draw(st.lists(st.integers(-4, 4), min_size=lat.rank, max_size=lat.rank))
    y = data.draw(st.lists(st.integers(-4, 4), min_size=lat.rank, max_size=lat.rank))
    assert pair(lat, x, y) == pair(lat, y, x)


def test_radical_examples():
    assert radical(U) == ()
    assert radical(Lattice(((0,),))) == ((1,),)


def test_signature_examples():
    assert signature(U) == (1, 1, 0)
    assert signature(e8()) == (0, 8, 0)
    assert signature(e10()) == (1, 9, 0)


@settings(max_examples=100, deadline=None)
@given(small_grams(), st.integers(0, 10**6))
def test_signature_congruence_invariant(lat, seed):
    u = random_unimodular(lat.rank, rng(seed))
    assert signature(congruent(lat, u)) == signature(lat)


@settings(max_examples=100, deadline=None)
@given(small_grams())
def test_quotient_by_radical_is_nondegenerate(lat):
    q, proj = quotient_by_radical(lat)
    sig = signature(lat)
    assert q.rank == lat.rank - sig.null
    assert radical(q) == ()
    # the induced pairing is well defined: <Px, Py> = <x, y>
    for i in range(lat.rank):
        for j in range(lat.rank):
            px = la.column(proj, i)
            py = la.column(proj, j)
            assert pair(q, px, py) == lat.gram[i][j]


def test_quotient_examples():
    q, proj = quotient_by_radical(U)
    assert q.gram == U.gram and proj == la.identity(2)
    q, _ = quotient_by_radical(Lattice(((0,),)))
    assert q.rank == 0


def test_orthogonal_complement_examples():
    assert orthogonal_complement(U, [(1, 0)]) == ((1, 0),)
    lat = direct_sum(U, diagonal(-2))
    comp = orthogonal_complement(lat, [(0, 0, 1)])
    assert sorted(comp) == [(0, 1, 0), (1, 0, 0)]
    k3 = direct_sum(U, U, U, e8(), e8())
    assert len(orthogonal_complement(k3, [])) == 22


def test_discriminant_examples():
    assert discriminant_group(e8()).is_trivial
    assert discriminant_group(diagonal(-2)).invariant_factors == (2,)
    assert discriminant_group(U).is_trivial
    assert str(discriminant_group(diagonal(-2, -2))) == "Z/2 + Z/2"
    with pytest.raises(LatticeError):
        discriminant_group(Lattice(((0,),)))


@settings(max_examples=100, deadline=None)
@given(small_grams())
def test_discriminant_order_is_det(lat):
    if lat.determinant == 0:
        return
    assert discriminant_group(lat).order == abs(lat.determinant)


def test_discriminant_action():
    two = diagonal(-2, -2)
    swap = Isometry(((0, 1), (1, 0)))
    assert is_isometry(two, swap.matrix)
    assert not acts_trivially_on_discriminant(two, swap)
    assert acts_trivially_on_discriminant(two, Isometry.identity(2))
    assert acts_trivially_on_discriminant(U, Isometry(((0, 1), (1, 0))))
    # -id on <-2>+<-2> is trivial on (Z/2)^2
    assert acts_trivially_on_discriminant(two, Isometry.negation(2))


def test_reflect_examples():
    lat = e8()
    s = reflect(lat, unit(8, 0))
    assert s(unit(8, 0)) == (-1,) + (0,) * 7
    # beta1 meets beta4 once
    assert s(unit(8, 3)) == tuple(a + b for a, b in zip(unit(8, 3), unit(8, 0)))
    assert reflect(U, (1, -1)).matrix == ((0, 1), (1, 0))


def test_reflect_errors():
    with pytest.raises(LatticeError):
        reflect(U, (1, 0))
    with pytest.raises(LatticeError):
        reflect(diagonal(1, 3), (1, 1))  # square 4 but <e1, v> = 1


def test_reflections_are_involutive_isometries():
    lat = direct_sum(U, diagonal(-2), diagonal(1))
    for v in admissible_vectors(lat, max_support=3):
        s = reflect(lat, v)
        assert is_isometry(lat, s.matrix)
        assert (s @ s).is_identity
        assert s(v) == tuple(-x for x in v)


def test_spinor_norm_examples():
    assert spinor_norm(U, reflect(U, (1, -1))) == 1
    assert spinor_norm(U, reflect(U, (1, 1))) == -1
    assert spinor_norm(U, Isometry.negation(2)) == -1
    with pytest.raises(LatticeError):
        spinor_norm(U, Isometry(((1, 1), (0, 1))))
    with pytest.raises(LatticeError):
        spinor_norm(Lattice(((0,),)), Isometry.identity(1))


SPINOR_LATTICES = [
    direct_sum(U, diagonal(-2)),
    diagonal(1, -1, -1, -1),
    direct_sum(U, diagonal(-2, 2)),
    Lattice(((-2, 1, 0), (1, -2, 1), (0, 1, -2))),
]


@pytest.mark.parametrize("lat", SPINOR_LATTICES)
def test_spinor_norm_of_reflection_is_sign_of_square(lat):
    for v in admissible_vectors(lat, max_support=3):
        assert spinor_norm(lat, reflect(lat, v)) == (1 if square(lat, v) < 0 else -1)


@pytest.mark.parametrize("lat", SPINOR_LATTICES)
def test_spinor_norm_multiplicative(lat):
    r = rng(7)
    pool = admissible_vectors(lat, max_support=3)
    for _ in range(25):
        g, _ = random_reflection_product(lat, pool, r, r.randint(1, 6))
        h, _ = random_reflection_product(lat, pool, r, r.randint(1, 6))
        assert spinor_norm(lat, g @ h) == spinor_norm(lat, g) * spinor_norm(lat, h)


def test_orientation_character_examples():
    lat = direct_sum(U, diagonal(-2))
    assert positive_orientation_character(lat, Isometry.identity(3)) == 1
    iota = Isometry(((-1, 0, 0), (0, -1, 0), (0, 0, 1)))
    assert positive_orientation_character(lat, iota) == -1
    for base in (U, lat):
        for v in admissible_vectors(base, squares=(-2,)):
            assert positive_orientation_character(base, reflect(base, v)) == 1
    with pytest.raises(LatticeError):
        positive_orientation_character(e8(), Isometry.identity(8))


def _second_diagonalization(lat, seed):
    u = random_unimodular(lat.rank, rng(seed))
    basis, diag = diagonalize(congruent(lat, u).gram)
    return [tuple(la.matvec(u, b)) for b in basis], diag


@pytest.mark.parametrize("lat", SPINOR_LATTICES[:3])
def test_orientation_character_independent_of_basis_and_multiplicative(lat):
    r = rng(3)
    pool = admissible_vectors(lat, max_support=3)
    for seed in range(15):
        g, _ = random_reflection_product(lat, pool, r, r.randint(1, 5))
        h, _ = random_reflection_product(lat, pool, r, r.randint(1, 5))
        alt = _second_diagonalization(lat, seed)
        chi = positive_orientation_character(lat, g)
        assert chi == positive_orientation_character(lat, g, alt)
        assert positive_orientation_character(lat, g @ h) == chi * positive_orientation_character(lat, h)


def test_second_diagonalization_is_orthogonal():
    lat = direct_sum(U, diagonal(-2, 2))
    basis, diag = _second_diagonalization(lat, 11)
    for i, b in enumerate(basis):
        for j, c in enumerate(basis):
            val = sum(Fraction(x) * y for x, y in zip(b, la.matvec(lat.gram, c)))
            assert val == (diag[i] if i == j else 0)


def test_factorization_round_trip_and_length():
    lat = SPINOR_LATTICES[2]
    pool = admissible_vectors(lat, max_support=3)
    r = rng(5)
    for _ in range(30):
        g, _ = random_reflection_product(lat, pool, r, r.randint(0, 8))
        w = factor_into_reflections(lat, g)
        assert len(w) <= 2 * lat.rank
        assert w.matrix(lat.gram) == g.matrix


def test_finite_abelian_group():
    g = FiniteAbelianGroup.from_relations([(2, 0), (0, 4)])
    assert g.invariant_factors == (2, 4) and g.order == 8 and str(g) == "Z/2 + Z/4"
    assert str(FiniteAbelianGroup(())) == "0"
    with pytest.raises(ValueError):
        FiniteAbelianGroup((2, 3))
    with pytest.raises(ValueError):
        FiniteAbelianGroup.from_relations([(2, 0)])


def test_scalar_round_trip():
    x = scalar.parse("2*c + d - 1")
    assert scalar.to_text(x) == "2*c + d - 1"
    assert scalar.parse(7) == 7
    assert scalar.parse("3 - 3") == 0
    assert scalar.parameters(x) == {"c", "d"}
    with pytest.raises(ValueError):
        scalar.normalize(scalar.parse("c") / 2)
