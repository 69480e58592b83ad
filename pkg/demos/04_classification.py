"""
Two-dimensional seeds over Q(i)
===============================

After bringing A to Jordan form and rescaling y0 = x1^d, every algebra
from a 2x2 seed is abelian or one of G1, G2(c), G3(c), except the family
diag(0, mu) with w on the zero axis, which has a (d-1)-dimensional center.
"""

from symlie import QQi, Matrix, classify, validate_seed

cases = [
    ("2I, w = (7, 5)", [[2, 0], [0, 2]], [7, 5]),
    ("diag(2, 6), w = e1", [[2, 0], [0, 6]], [1, 0]),
    ("Jordan block 5", [[5, 1], [0, 5]], [1, 0]),
    ("rotation, w = (1, -i)", [[0, -1], [1, 0]], [1, "-i"]),
    ("nilpotent", [[0, 1], [0, 0]], [1, 0]),
    ("diag(0, 1), w = e1", [[0, 0], [0, 1]], [1, 0]),
]

for name, A, w in cases:
    seed = validate_seed(Matrix(A, QQi), [QQi(x) for x in w])
    result = classify(seed, 3)
    verified = result.witness.verified if result.witness else None
    print(f"{name:24s} {str(result.label):14s} witness verified: {verified}", result.label.detail or "")

result = classify(validate_seed(Matrix([[2, 0], [0, 6]], QQi), [1, 0]), 2)
print(result.witness.map)
