"""Which isometries of the second homology come from diffeomorphisms."""

from surfacelattice import Isometry, SurfaceSpec, build_iota, decide, reflect
from surfacelattice.elliptic import build_full_H2bar, surface_invariants


def show(spec, g, label, **kw):
    v = decide(spec, g, **kw)
    print(f"  {label}: {v.tag.value} (k {v.k_action.value}, spinor norm {v.spinor_norm:+d})")
    print(f"    {v.certificate}")


for spec in [SurfaceSpec(1, 0), SurfaceSpec(1, 0, (2, 2)), SurfaceSpec(1, 0, (2, 3)), SurfaceSpec(2, 0), SurfaceSpec(3, 0)]:
    inv = surface_invariants(spec)
    lat, k, _ = build_full_H2bar(spec)
    print(f"{spec.to_dict()}: {inv.case_tag.value}, {lat.label}")
    n = lat.rank
    show(spec, Isometry.negation(n), "-id")
    if inv.b_plus >= 3:
        show(spec, build_iota(lat, k), "inversion on a hyperbolic plane")
    if inv.parity == "odd":
        show(spec, reflect(lat, tuple(int(i in (1, 2)) for i in range(n))), "reflection moving k")
