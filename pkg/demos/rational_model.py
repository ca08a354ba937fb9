"""The degenerate lattice spanned by the -2 curves of a rational elliptic
surface: its radical and the -E8 left over."""

from surfacelattice import quotient_by_radical, radical, signature
from surfacelattice.elliptic import build_X1_minus_nf

for n in range(4):
    lat, delta, ell = build_X1_minus_nf(n)
    q, _ = quotient_by_radical(lat)
    print(
        f"n={n}: rank {lat.rank}, radical rank {len(radical(lat))}, "
        f"quotient even={q.is_even} det={q.determinant} signature={tuple(signature(q))}"
    )

lat, delta, ell = build_X1_minus_nf(1)
print("generators:", ", ".join(delta.names))
print("long vector:", ell)
