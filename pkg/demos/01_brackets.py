"""
Brackets on homogeneous polynomials
===================================

A matrix A with an eigenvector w turns the degree-d polynomials in
x1..xn into a Lie algebra:

    [f, g] = g(w) * A*(f) - f(w) * A*(g),    A*(f)(v) = f(A v)
"""

from symlie import QQ, HomPoly, Matrix, bracket, induced_matrix, monomial_basis, structure_constants, validate_seed

a = 3
seed = validate_seed(Matrix([[1, 0], [a, 1]], QQ), [0, 1])
print("eigenvalue of w:", seed.lam)

# the basis of degree 2 is x1^2, x1*x2, x2^2 (x1-power first)
print(monomial_basis(2, 2).labels)

# A* substitutes x2 -> a*x1 + x2; column j is the image of basis monomial j
print(induced_matrix(seed.A, 2))

l1, l2, l3 = (HomPoly.basis_element(2, 2, i, QQ) for i in range(3))
print("[l2, l3] =", bracket(seed, 2, l2, l3))

# the full table of structure constants, and its JSON form
table = structure_constants(seed, 2)
print(table.pretty())
print(table.to_json())
