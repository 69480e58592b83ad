"""
Conjugate seeds give isomorphic algebras
========================================

T . (A, w) = (T A T^-1, T w) changes the algebra only up to isomorphism.
The isomorphism is the map induced by T^-1 on degree-d polynomials.
"""

from symlie import QQ, Matrix, conjugated_iso, fingerprint, structure_constants, validate_seed

seed = validate_seed(Matrix([[2, 0], [1, 3]], QQ), [0, 1])
T = Matrix([[1, 2], [1, 3]], QQ)

seed2, witness = conjugated_iso(seed, T, 3)
print("conjugated seed:", seed2.A, seed2.w)
print("witness verified:", witness.verified)
print(witness.map)

f1 = fingerprint(structure_constants(seed, 3))
f2 = fingerprint(structure_constants(seed2, 3))
print(f1)
print("fingerprints equal:", f1 == f2)

# scaling w is conjugation by a scalar matrix
_, w = conjugated_iso(seed, Matrix.identity(2, QQ) * 5, 3)
print("w -> 5w verified:", w.verified)
