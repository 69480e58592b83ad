"""
Counting over F_p
=================

Over a finite field the seed pairs can be listed outright.  GL_n(F_p)
acts on them by conjugation; algebras from one orbit are isomorphic, but
different orbits can also give isomorphic algebras.
"""

from symlie import GF, Matrix, brute_force_iso, eigendirections, gl_orbits, iso_classes, structure_constants
from symlie import validate_seed

F2 = GF(2)
report = gl_orbits(2, 2)
print("pairs:", report.pair_count, "orbits:", report.orbit_count, "|GL_2(F_2)|:", report.group_order)
print(report.to_csv())

# the identity and a unipotent matrix: different orbits, the same algebra
t1 = structure_constants(validate_seed(Matrix.identity(2, F2), [1, 0]), 1)
t2 = structure_constants(validate_seed(Matrix([[1, 1], [0, 1]], F2), [1, 0]), 1)
w = brute_force_iso(t1, t2)
print("isomorphism:", w.map)

for d in (1, 2):
    rep = iso_classes(2, 2, d)
    print(f"d={d}: {rep.class_count} classes from {rep.orbit_count} orbits", rep.classes)

print(eigendirections(Matrix.identity(2, GF(3))))
