"""Exact construction and analysis of Lie algebra structures on symmetric powers.

A square matrix ``A`` with an eigenvector ``w`` defines the bracket

    [f, g] = g(w) * A*(f) - f(w) * A*(g)

on homogeneous polynomials of degree ``d``, where ``A*(f)(v) = f(A v)``.
"""

from .analysis import (
    Fingerprint,
    HomWitness,
    SeriesReport,
    Violation,
    ad_matrix,
    brute_force_iso,
    center,
    check_alternating_jacobi,
    conjugate_seed,
    conjugated_iso,
    derivation_dim,
    derived_series,
    fingerprint,
    is_lie,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    product_space,
    verify_hom,
)
from .bracket import LieTable, SeedPair, bracket, bracket_table, graded_table, structure_constants, validate_seed
from .classify import ClassLabel, Classification, JordanForm2, classify, family_table, jordan_form_2x2
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EigenvaluesNotInField,
    FieldMismatch,
    NotAnEigenvector,
    Singular,
    SymlieError,
)
from .fields import GF, QQ, QQi, GaussianRational, Residue, field_from_tag, field_of
from .linalg import Matrix, Subspace, inverse, kernel, nilpotency_index, rank, rref, solve, span
from .orbits import OrbitReport, eigendirections, enumerate_M, gl_orbits, iso_class_count, iso_classes
from .sympower import HomPoly, MonomialBasis, evaluate, induced_matrix, monomial_basis, multiply

__version__ = "0.1.0"
