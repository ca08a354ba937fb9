"""Torsion of the complement of the fibre class for a few multiplicity lists."""

from surfacelattice import torsion_of_complement

for ms in [(2, 2), (2, 3), (2, 4), (3, 3, 3), (2, 4, 6)]:
    m, grp = torsion_of_complement(ms)
    print(f"{list(ms)}: lcm {m}, torsion {grp}")
