"""Symbolic check of the generating set for irregular surfaces.

The pairings of the adjusted beta_8 are polynomials in the unknown
coefficients. The printed adjustment leaves beta_8 . beta_8 off by a
quadratic; adjusting by radical classes instead clears everything.
"""

import sympy

from surfacelattice import verify_thm2_construction

rep = verify_thm2_construction()
print("entries checked:", len(rep.residuals))
for key, value in rep.nonzero().items():
    print(f"  {key}: {value}   = {sympy.factor(value)}")
print("eps rows all zero:", all(v == 0 for k, v in rep.residuals.items() if "eps" in k))

alt = verify_thm2_construction("radical")
print("radical adjustment, nonzero entries:", alt.nonzero() or "none")
