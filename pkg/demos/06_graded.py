"""
All degrees at once
===================

Brackets between different degrees are zero, so the degrees 0..D stack
into one block-diagonal algebra.
"""

from symlie import QQ, Matrix, derived_series, graded_table, validate_seed

seed = validate_seed(-Matrix.identity(2, QQ), [1, 0])
t = graded_table(seed, 3)
print(t.pretty())

# the raw values carry the sign -lambda^d per degree; rescaling y0 in each
# degree by (-1)^(d+1) gives [y0, yi] = yi throughout
print(derived_series(t).dims)
