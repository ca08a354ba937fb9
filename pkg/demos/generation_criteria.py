"""Ebeling's three hypotheses on the -2 curves of several elliptic surfaces,
and the semidefinite lemma for the rational surface."""

from surfacelattice import SurfaceSpec, build_delta_model, check_ebeling, check_semidefinite_lemma

for spec in [SurfaceSpec(1, 1), SurfaceSpec(2, 1), SurfaceSpec(2, 0), SurfaceSpec(1, 0, (2, 3))]:
    m = build_delta_model(spec)
    rep = check_ebeling(m.lattice, m.delta)
    print(
        f"{spec.to_dict()}: {len(m.delta)} classes, spans={rep.spans}, connected={rep.orbit_connected}, "
        f"lambda={list(rep.witness_names) or None}"
    )

m = build_delta_model(SurfaceSpec(1, 0))
rep = check_semidefinite_lemma(m.lattice, m.delta, m.e8_section)
print("rational surface, semidefinite lemma:", rep.passed, rep.notes or "")
