"""Exact integer-lattice tools for reflection groups, spinor norms and the
homology lattices of elliptic surfaces."""

from .decider import KAction, Verdict, VerdictTag, build_iota, decide, k_action, stabilizer_predicates
from .dynkin import DIAGRAM_LAMBDA, DYNKIN_E8, DYNKIN_E10, LONG_VECTOR, diagonal, direct_sum, e8, e10, hyperbolic_plane
from .elliptic import (
    Case,
    ConstructionReport,
    SurfaceInvariants,
    SurfaceSpec,
    build_delta_model,
    build_E10_basis,
    build_full_H2bar,
    build_sigma_triple,
    build_X1_minus_nf,
    surface_invariants,
    torsion_of_complement,
    verify_thm2_construction,
)
from .enumeration import enumerate_vectors_of_square
from .factorization import ReflectionWord, factor_into_reflections
from .lattice import (
    FiniteAbelianGroup,
    Isometry,
    Lattice,
    LatticeError,
    Signature,
    acts_trivially_on_discriminant,
    discriminant_group,
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
from .normal_forms import hermite, smith
from .reflection_groups import (
    DeltaSet,
    EbelingReport,
    NotInGroup,
    check_ebeling,
    check_semidefinite_lemma,
    find_lambda_diagram,
    orbit_closure,
    unit_edge_connected,
    word_in_root_reflections,
)
