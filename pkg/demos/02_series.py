"""
Solvable, sometimes nilpotent
=============================

Every bracket vanishes at w, so [[g, g], [g, g]] = 0 for every seed.
A nilpotent A makes the whole algebra nilpotent.
"""

import random

from symlie import QQ, Matrix, check_alternating_jacobi, derived_series, is_nilpotent, lower_central_series
from symlie import structure_constants, validate_seed

seed = validate_seed(Matrix([[1, 0], [1, 1]], QQ), [0, 1])
t = structure_constants(seed, 2)
print("jacobi:", check_alternating_jacobi(t) or "ok")
print("derived series:", derived_series(t).dims)
print("lower central series:", lower_central_series(t).dims, "(stalls: A is not nilpotent)")

# a strictly lower triangular A and a vector in its kernel
nil = validate_seed(Matrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]], QQ), [1, 0, 0])
t = structure_constants(nil, 2)
print(t.pretty())
print("lower central series:", lower_central_series(t).dims, "class:", is_nilpotent(t)[1])

# a few random seeds, all solvable in at most two steps
rng = random.Random(7)
for _ in range(5):
    lam = rng.randint(-2, 2)
    A = Matrix([[lam, rng.randint(-2, 2), rng.randint(-2, 2)], [0, rng.randint(-2, 2), rng.randint(-2, 2)], [0, rng.randint(-2, 2), rng.randint(-2, 2)]], QQ)
    t = structure_constants(validate_seed(A, [1, 0, 0]), 3)
    print(t.dim, derived_series(t).dims)
