"""
Coincidence and fixed-point spectra on small images
===================================================

"""

from digitop import builders, coincidence_spectrum, fixed_point_spectrum

# the unit cube: 8 points, each adjacent to its 3 axis neighbors
cube = builders.cube()
print("cube:", cube.n_points, "points,", len(cube.edges), "edges")

# which coincidence counts can a single self-map realize as fixed points?
f_spec = fixed_point_spectrum(cube)
print("F(cube) =", sorted(f_spec.as_set()))

# pairs of maps cube -> cube realize every count from 0 to 8
cs = coincidence_spectrum(cube, cube, 2)
print("CS_2(cube, cube) =", sorted(cs.as_set()))

# against a one-point codomain only the full count is possible
cs_point = coincidence_spectrum(cube, builders.singleton(), 2)
print("CS_2(cube, point) =", sorted(cs_point.as_set()))

# cycles: the fixed-point spectrum develops a gap once n reaches 5
for n in range(1, 8):
    spec = fixed_point_spectrum(builders.cycle(n))
    print(f"F(C_{n}) =", sorted(spec.as_set()))
