"""A -E10 basis built from a -E8 section, a fibre and a section class."""

from surfacelattice import Isometry, e8, word_in_root_reflections
from surfacelattice.elliptic import build_E10_basis, e10_invariants

lat, vecs, rep = build_E10_basis()
print("residuals checked:", len(rep.residuals), "nonzero:", rep.nonzero() or "none")
print("assumptions:", "; ".join(rep.assumptions))
print("invariants:", e10_invariants(lat, vecs))

word = word_in_root_reflections(e8(), Isometry.negation(8))
print("-id on -E8 as a product of", len(word), "root reflections")
