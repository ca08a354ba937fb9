"""The 240 roots of -E8, found twice: by short-vector search and as the
orbit of one simple root under the simple reflections."""

from surfacelattice import DeltaSet, e8, enumerate_vectors_of_square, orbit_closure

lat = e8()
print(lat.label, "rank", lat.rank, "det", lat.determinant, "even", lat.is_even)

roots = enumerate_vectors_of_square(lat, -2)
print("vectors of square -2:", len(roots))

simple = DeltaSet(lat, [tuple(int(i == j) for j in range(8)) for i in range(8)])
orbit = orbit_closure(simple, [simple.vectors[0]])
print("orbit of the first simple root:", len(orbit), "same set:", orbit == set(roots))

# the highest root in these coordinates
print("largest coefficient sum:", max(roots, key=sum))
