"""A battery of end-to-end checks of the constructions and criteria.

Sections: 1 constructions, 2 reflection-group criteria, 3 torsion,
4 the E10 basis, 5 the realization decider. Each check is a small function
returning (passed, detail); ``run`` collects them in a deterministic order.
"""

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import reduce

from .decider import KAction, VerdictTag, build_iota, decide
from .dynkin import e8
from .elliptic import (
    SurfaceSpec,
    build_delta_model,
    build_E10_basis,
    build_full_H2bar,
    build_sigma_triple,
    build_X1_minus_nf,
    e10_invariants,
    torsion_of_complement,
    verify_thm2_construction,
)
from .lattice import Isometry, pair, quotient_by_radical, radical, reflect, signature, square
from .normal_forms import hermite_basis
from .reflection_groups import check_ebeling, check_semidefinite_lemma, word_in_root_reflections

log = logging.getLogger(__name__)

SECTIONS = {1: "constructions", 2: "reflection groups", 3: "torsion", 4: "E10", 5: "decider"}


@dataclass
class Check:
    section: int
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        return {"section": self.section, "name": self.name, "passed": self.passed, "detail": self.detail}


_REGISTRY = []


def check(section, name):
    def wrap(fn):
        _REGISTRY.append((section, name, fn))
        return fn

    return wrap


def _unit(n, i):
    return tuple(int(j == i) for j in range(n))


@check(1, "radical of the rational model is spanned by ell + alpha_i (n = 0..3)")
def _radical_spans():
    for n in range(4):
        lat, _, ell = build_X1_minus_nf(n)
        expected = [tuple(a + b for a, b in zip(ell, _unit(lat.rank, 8 + i))) for i in range(2 * n + 1)]
        if hermite_basis(radical(lat)) != hermite_basis(expected):
            return False, f"n={n}"
    return True, "n = 0, 1, 2, 3"


@check(1, "rational model modulo its radical is even, unimodular, negative definite of rank 8")
def _quotient():
    for n in range(4):
        q, _ = quotient_by_radical(build_X1_minus_nf(n)[0])
        if not (q.is_even and q.determinant == 1 and tuple(signature(q)) == (0, 8, 0)):
            return False, f"n={n}"
    return True, ""


@check(1, "irregular generating set: -E8 block after the printed beta_8 adjustment")
def _irregular_block():
    rep = verify_thm2_construction()
    bad = {k: v for k, v in rep.nonzero().items() if k.startswith("beta") and k.count("beta") == 2}
    return not bad, "; ".join(f"{k}: {v}" for k, v in bad.items()) or "all zero"


@check(1, "irregular generating set: beta_8 . gamma, beta_8 . delta residuals emitted")
def _irregular_gamma():
    rep = verify_thm2_construction()
    keys = ("beta8.gamma", "beta8.delta")
    ok = all(k in rep.residuals for k in keys)
    return ok, "; ".join(f"{k} = {rep.residuals[k]}" for k in keys)


@check(1, "irregular generating set: every eps row of the lambda diagram")
def _irregular_eps():
    rep = verify_thm2_construction()
    rows = {k: v for k, v in rep.residuals.items() if "eps" in k}
    bad = {k: v for k, v in rows.items() if v != 0}
    return len(rows) == 15 and not bad, f"{len(rows)} entries, nonzero: {bad or 'none'}"


@check(1, "irregular generating set: adjustment by radical classes clears every residual")
def _irregular_radical():
    rep = verify_thm2_construction("radical")
    return not rep.nonzero(), f"nonzero: {rep.nonzero() or 'none'}"


@check(1, "delta model (1,1): 20 classes alpha1-7, beta1-8, gamma1, delta1, eps1-3")
def _delta_11():
    m = build_delta_model(SurfaceSpec(1, 1))
    return len(m.delta) == 20, f"{len(m.delta)} classes"


@check(1, "delta model (2,1): each zeta meets one alpha of each adjacent summand once")
def _delta_21():
    m = build_delta_model(SurfaceSpec(2, 1))
    v = m.vectors
    for z in ("zeta1[2]", "zeta2[2]"):
        hits = [n for n in m.delta.names if n.startswith("alpha") and pair(m.lattice, v[z], v[n]) == 1]
        if len(hits) != 2 or sum(h.endswith("[2]") for h in hits) != 1:
            return False, f"{z} meets {hits}"
    return True, ""


@check(1, "sigma triples (m = 2..5): squares -2, sigma1 - sigma2 = f/m, sigma3 meets both once")
def _sigma():
    for m in range(2, 6):
        t = build_sigma_triple(m)
        lat = t.lattice
        diff = tuple(a - b for a, b in zip(t.sigma1, t.sigma2))
        ok = (
            all(square(lat, s) == -2 for s in (t.sigma1, t.sigma2, t.sigma3))
            and diff == t.fibre_part
            and square(lat, diff) == 0
            and pair(lat, t.sigma1, t.sigma3) == 1
            and pair(lat, t.sigma2, t.sigma3) == 1
            and pair(lat, t.sigma1, t.sigma2) == -2
            and t.divisibility_of_fibre() % m == 0
        )
        if not ok:
            return False, f"m={m}"
    return True, ""


def _ebeling_ok(spec):
    m = build_delta_model(spec)
    rep = check_ebeling(m.lattice, m.delta)
    return rep.conclusion_applicable, f"witness {list(rep.witness_names)}"


for _spec in [(1, 1, ()), (2, 1, ()), (2, 0, ()), (3, 0, ())]:
    check(2, f"Ebeling hypotheses hold for {_spec}")(lambda s=_spec: _ebeling_ok(SurfaceSpec(*s)))


def _semidefinite_ok(spec):
    m = build_delta_model(spec)
    rep = check_semidefinite_lemma(m.lattice, m.delta, m.e8_section)
    return rep.passed, "; ".join(rep.notes) or "radical + (-E8), all hypotheses met"


for _spec in [(1, 0, ()), (1, 0, (2, 3)), (1, 0, (2, 2))]:
    check(2, f"semidefinite lemma hypotheses hold for {_spec} (p_g = 0)")(
        lambda s=_spec: _semidefinite_ok(SurfaceSpec(*s))
    )


def brute_force_quotient(ms):
    """Element-order census of (+) Z/m_i modulo the diagonal, by enumeration."""
    n = len(ms)
    m = reduce(math.lcm, ms, 1)

    def canon(x):
        # smallest representative of x + Z(1,..,1)
        return min(tuple((xi + t) % mi for xi, mi in zip(x, ms)) for t in range(m))

    elements = {canon(x) for x in itertools.product(*(range(mi) for mi in ms))} if n else {()}
    orders = Counter()
    for x in elements:
        k = 1
        while canon(tuple(k * xi for xi in x)) != canon((0,) * n):
            k += 1
        orders[k] += 1
    return orders


def _census(invariant_factors):
    orders = Counter()
    for x in itertools.product(*(range(d) for d in invariant_factors)):
        orders[reduce(math.lcm, (d // math.gcd(d, xi) for xi, d in zip(x, invariant_factors)), 1)] += 1
    return orders


@check(3, "torsion of the complement: [2,2] -> Z/2, [2,3] -> 0, [2,4] -> Z/2, [3,3,3] -> Z/3 + Z/3")
def _torsion():
    expected = {(2, 2): (2,), (2, 3): (), (2, 4): (2,), (3, 3, 3): (3, 3)}
    for ms, inv in expected.items():
        m, t = torsion_of_complement(ms)
        if t.invariant_factors != inv or _census(inv) != brute_force_quotient(ms):
            return False, f"{ms}: got {t}"
        if t.order * m != math.prod(ms):
            return False, f"{ms}: order"
    return True, ""


@check(4, "E10 basis residuals vanish")
def _e10_res():
    _, _, rep = build_E10_basis()
    return not rep.nonzero() and not rep.constraints_required, f"{len(rep.residuals)} entries"


@check(4, "E10 specialization is even, unimodular, of signature (1, 9)")
def _e10_spec():
    lat, vecs, _ = build_E10_basis()
    inv = e10_invariants(lat, vecs)
    ok = inv["even"] and abs(inv["determinant"]) == 1 and inv["signature"] == (1, 9) and inv["matches_dynkin"]
    return ok, str(inv)


@check(4, "-id on -E8 is a product of root reflections")
def _e8_word():
    lat = e8()
    g = Isometry.negation(8)
    w = word_in_root_reflections(lat, g)
    return w.matrix(lat.gram) == g.matrix, f"word length {len(w)}"


@check(5, "rational surface: -id and a reflection in a square +1 vector are realized")
def _dec_rational():
    spec = SurfaceSpec(1, 0)
    lat, _, _ = build_full_H2bar(spec)
    gs = [Isometry.negation(lat.rank), reflect(lat, _unit(lat.rank, 0))]
    return all(decide(spec, g).tag == VerdictTag.REALIZED for g in gs), ""


@check(5, "K3: inversion on a hyperbolic plane is not realized")
def _dec_k3():
    spec = SurfaceSpec(2, 0)
    lat, k, _ = build_full_H2bar(spec)
    v = decide(spec, build_iota(lat, k))
    return v.tag == VerdictTag.NOT_REALIZED and v.spinor_norm == -1, v.certificate


@check(5, "Dolgachev (1,0,[2,3]): k-fixing and k-negating isometries realized, others not")
def _dec_dolgachev():
    spec = SurfaceSpec(1, 0, (2, 3))
    lat, k, _ = build_full_H2bar(spec)
    n = lat.rank
    fix = reflect(lat, tuple(a - b for a, b in zip(_unit(n, 1), _unit(n, 2))))
    other = reflect(lat, tuple(a + b for a, b in zip(_unit(n, 1), _unit(n, 2))))
    results = [decide(spec, g) for g in (fix, Isometry.negation(n) @ fix, other)]
    acts = [r.k_action for r in results]
    tags = [r.tag for r in results]
    ok = acts == [KAction.FIX, KAction.NEGATE, KAction.OTHER] and tags == [
        VerdictTag.REALIZED,
        VerdictTag.REALIZED,
        VerdictTag.NOT_REALIZED,
    ]
    return ok, f"{[a.value for a in acts]} -> {[t.value for t in tags]}"


@check(5, "p_g > 0 (3,0,[]): -id is coset dependent without a witness parity")
def _dec_coset():
    spec = SurfaceSpec(3, 0)
    lat, _, _ = build_full_H2bar(spec)
    v = decide(spec, Isometry.negation(lat.rank))
    return v.tag == VerdictTag.COSET_DEPENDENT, v.certificate


def run(section=None):
    if section is not None and section not in SECTIONS:
        raise ValueError(f"unknown section {section}; choose from {sorted(SECTIONS)}")
    out = []
    for sec, name, fn in _REGISTRY:
        if section is not None and sec != section:
            continue
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failed check, reported as such
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        log.info("[%s] %s: %s", "PASS" if passed else "FAIL", name, detail)
        out.append(Check(sec, name, bool(passed), detail))
    return out


def format_table(checks):
    lines = []
    for c in checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.section}  {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
    return "\n".join(lines)


__all__ = ["Check", "SECTIONS", "brute_force_quotient", "format_table", "run"]
