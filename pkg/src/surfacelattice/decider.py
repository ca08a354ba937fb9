"""Which isometries of (H2bar, k) come from diffeomorphisms.

The classification follows the surface's case: rational and Enriques
surfaces realize everything, K3 realizes the spinor-norm-one subgroup, the
other p_g = 0 surfaces realize the stabilizer of k up to sign, and for
p_g > 0 the realized group is generated by the spinor-norm-one stabilizer
of k together with one diffeomorphism reversing k. The spinor norm of that
last diffeomorphism is not determined here; callers may supply it.
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from . import _linalg as la
from .elliptic import Case, SurfaceSpec, build_full_H2bar, surface_invariants
from .lattice import (
    Isometry,
    LatticeError,
    is_isometry,
    pair,
    positive_orientation_character,
    signature,
    spinor_norm,
    square,
)
from .normal_forms import solve_integer


class KAction(str, Enum):
    FIX = "FIX"
    NEGATE = "NEGATE"
    OTHER = "OTHER"


class VerdictTag(str, Enum):
    REALIZED = "REALIZED"
    NOT_REALIZED = "NOT_REALIZED"
    COSET_DEPENDENT = "COSET_DEPENDENT"


@dataclass(frozen=True)
class Verdict:
    tag: VerdictTag
    certificate: str
    case: Case
    spinor_norm: int
    k_action: KAction

    def to_dict(self):
        return {
            "tag": self.tag.value,
            "certificate": self.certificate,
            "case": self.case.value,
            "spinor_norm": self.spinor_norm,
            "k_action": self.k_action.value,
        }


def _matrix(g):
    return g.matrix if isinstance(g, Isometry) else tuple(map(tuple, g))


def k_action(lat, k, g):
    gk = la.matvec(_matrix(g), k)
    if tuple(gk) == tuple(k):
        return KAction.FIX
    if tuple(gk) == tuple(-x for x in k):
        return KAction.NEGATE
    return KAction.OTHER


def stabilizer_predicates(lat, k, g):
    act = k_action(lat, k, g)
    theta = spinor_norm(lat, g)
    return {
        "in_O_k": act == KAction.FIX,
        "in_Oprime": theta == 1,
        "in_Oprime_k": act == KAction.FIX and theta == 1,
        "orientation_character": positive_orientation_character(lat, g),
    }


def _sparse_vectors(rank, max_support, bound):
    """Integer vectors by increasing support, then coefficient size; the first
    nonzero coefficient is positive."""
    coeffs = [c for a in range(1, bound + 1) for c in (a, -a)]
    for size in range(1, max_support + 1):
        for idx in itertools.combinations(range(rank), size):
            for first in range(1, bound + 1):
                for rest in itertools.product(coeffs, repeat=size - 1):
                    v = [0] * rank
                    v[idx[0]] = first
                    for i, c in zip(idx[1:], rest):
                        v[i] = c
                    yield tuple(v)


def find_hyperbolic_pair(lat, p, max_support=4, bound=4):
    """(e, f) spanning a copy of U orthogonal to p and to a partner w of p.

    w is a lattice vector with <w, p> = 1, so span(p, w) is unimodular and
    splits off; e is an isotropic primitive vector of its complement found by
    sparse search, and f a partner with <e, f> = 1 and <f, f> = 0.
    """
    g = lat.gram
    gp = la.matvec(g, p)
    w = next((tuple(int(i == j) for j in range(lat.rank)) for i in range(lat.rank) if gp[i] == 1), None)
    if w is None:
        w = solve_integer([gp], [1])
        if w is None:
            raise LatticeError("p is not primitive in a unimodular lattice: no w with <w, p> = 1")
        w = tuple(w)
    gw = la.matvec(g, w)

    def orthogonal(v):
        return la.dot(v, gp) == 0 and la.dot(v, gw) == 0

    e = None
    for v in _sparse_vectors(lat.rank, max_support, bound):
        if orthogonal(v) and square(lat, v) == 0 and math.gcd(*v) == 1:
            e = v
            break
    if e is None:
        raise LatticeError(f"no isotropic vector orthogonal to p, w with support <= {max_support}, |coords| <= {bound}")
    ge = la.matvec(g, e)
    f = None
    for v in _sparse_vectors(lat.rank, max_support, bound):
        if la.dot(v, ge) == 1 and orthogonal(v) and square(lat, v) % 2 == 0:
            f = v
            break
    if f is None:
        sol = solve_integer([ge, gp, gw], [1, 0, 0])
        if sol is None or square(lat, sol) % 2:
            raise LatticeError("no partner of even square for the isotropic vector")
        f = tuple(sol)
    c = square(lat, f) // 2
    f = tuple(a - c * b for a, b in zip(f, e))
    return e, f


def build_iota(lat, k, p=None, max_support=4, bound=4):
    """-id on a hyperbolic plane orthogonal to k, identity on its complement.

    Needs b+ >= 3 (positive geometric genus). Postconditions are checked:
    iota is an involutive isometry fixing k, of spinor norm -1 and
    orientation character -1.
    """
    sig = signature(lat)
    if sig.null or sig.positive < 3:
        raise LatticeError("inversion needs a nondegenerate lattice with b+ >= 3 (positive geometric genus)")
    if p is None:
        if any(k):
            gcd = math.gcd(*k)
            p = tuple(x // gcd for x in k)
        else:
            p = tuple(int(i == 0) for i in range(lat.rank))
    e, f = find_hyperbolic_pair(lat, p, max_support, bound)
    cols = []
    for j in range(lat.rank):
        x = tuple(int(i == j) for i in range(lat.rank))
        a, b = pair(lat, x, f), pair(lat, x, e)
        cols.append(tuple(xi - 2 * (a * ei + b * fi) for xi, ei, fi in zip(x, e, f)))
    iota = Isometry(la.from_columns(cols, lat.rank))
    if not is_isometry(lat, iota.matrix):
        raise AssertionError("inversion is not an isometry")
    if not (iota @ iota).is_identity:
        raise AssertionError("inversion is not an involution")
    if tuple(iota(k)) != tuple(k):
        raise AssertionError("inversion moves k")
    if spinor_norm(lat, iota) != -1 or positive_orientation_character(lat, iota) != -1:
        raise AssertionError("inversion does not have spinor norm -1 and orientation character -1")
    return iota


def decide(spec, g, witness_parity=None, model=None):
    """Classify g, an isometry of build_full_H2bar(spec).

    ``witness_parity`` is the spinor norm of a diffeomorphism sending k to
    -k; it is only consulted for p_g > 0 surfaces other than K3.
    """
    spec = SurfaceSpec.coerce(spec)
    inv = surface_invariants(spec)
    lat, k, _ = model or build_full_H2bar(spec)
    m = _matrix(g)
    if not is_isometry(lat, m):
        raise LatticeError("g is not an isometry of the model lattice")
    g = Isometry(m)
    theta = spinor_norm(lat, g)
    act = k_action(lat, k, g)
    case = inv.case_tag
    R, N, C = VerdictTag.REALIZED, VerdictTag.NOT_REALIZED, VerdictTag.COSET_DEPENDENT
    if case == Case.RATIONAL:
        tag, cert = R, "rational surface: every isometry is realized"
    elif case == Case.ENRIQUES:
        tag, cert = R, "Enriques surface: every isometry is realized"
    elif case == Case.K3:
        if theta == 1:
            tag, cert = R, "K3: spinor norm +1, g lies in the spinor-norm-one subgroup"
        else:
            tag, cert = N, "K3: spinor norm -1; diffeomorphisms preserve the homology orientation (Seiberg-Witten)"
    elif case == Case.PG0_NONRATIONAL:
        if act == KAction.OTHER:
            tag, cert = N, "p_g = 0: g moves k off +-k; k is invariant up to sign (Seiberg-Witten)"
        else:
            tag, cert = R, f"p_g = 0: g(k) = {'k' if act == KAction.FIX else '-k'}, inside the stabilizer of k times +-id"
    else:
        if act == KAction.OTHER:
            tag, cert = N, "p_g > 0: g moves k off +-k; k is invariant up to sign (Seiberg-Witten)"
        elif act == KAction.FIX:
            if theta == 1:
                tag, cert = R, "p_g > 0: g fixes k and has spinor norm +1"
            else:
                tag, cert = N, (
                    "p_g > 0: g fixes k with spinor norm -1, so it reverses the homology orientation "
                    "while fixing k (Seiberg-Witten obstruction)"
                )
        elif witness_parity is None:
            tag, cert = C, (
                f"p_g > 0: g(k) = -k with spinor norm {theta:+d}; realized iff this equals the spinor norm "
                "of a diffeomorphism reversing k (witness parity not supplied)"
            )
        else:
            if witness_parity not in (1, -1):
                raise LatticeError("witness parity must be +1 or -1")
            ok = theta == witness_parity
            tag = R if ok else N
            cert = f"p_g > 0: g(k) = -k, spinor norm {theta:+d} {'equals' if ok else 'differs from'} witness parity {witness_parity:+d}"
    return Verdict(tag, cert, case, theta, act)
