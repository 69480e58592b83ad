"""Monomial bases of symmetric powers, homogeneous polynomials, and induced maps.

Degree-``d`` monomials in ``x1..xn`` are ordered lexicographically descending
on exponent vectors (highest power of ``x1`` first).  For two variables this
puts ``x1**(d-i) * x2**i`` at index ``i``; for three variables in degree 2 it
gives ``x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^2``.  This order is part of the
public contract: every coefficient vector and every induced matrix is written
in it.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Sequence

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field
from .linalg import Matrix


@lru_cache(maxsize=None)
def _exponents(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for idx in combinations_with_replacement(range(n), d):
        e = [0] * n
        for j in idx:
            e[j] += 1
        out.append(tuple(e))
    return tuple(out)


def monomial_label(e: Sequence[int]) -> str:
    parts = []
    for j, k in enumerate(e):
        if k == 1:
            parts.append(f"x{j + 1}")
        elif k > 1:
            parts.append(f"x{j + 1}^{k}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialBasis:
    n: int
    d: int
    exponents: tuple[tuple[int, ...], ...] = dc_field(compare=False, repr=False)
    _index: dict = dc_field(compare=False, repr=False)

    def __len__(self):
        return len(self.exponents)

    def index(self, e: Sequence[int]) -> int:
        return self._index[tuple(e)]

    @property
    def labels(self) -> list[str]:
        return [monomial_label(e) for e in self.exponents]


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> MonomialBasis:
    """Ordered basis of degree-``d`` monomials in ``n`` variables; it has ``comb(n+d-1, d)`` elements.

    The basis itself is field-independent; polynomials carry their field.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    exps = _exponents(n, d)
    assert len(exps) == comb(n + d - 1, d)
    return MonomialBasis(n, d, exps, {e: i for i, e in enumerate(exps)})


class HomPoly:
    """Homogeneous polynomial as a coefficient vector over :func:`monomial_basis`."""

    __slots__ = ("basis", "coeffs", "field")

    def __init__(self, basis: MonomialBasis, coeffs: Sequence, field: Field):
        if len(coeffs) != len(basis):
            raise DimensionMismatch(f"{len(coeffs)} coefficients for a basis of size {len(basis)}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coeffs", tuple(field(c) for c in coeffs))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("HomPoly is immutable")

    @classmethod
    def monomial(cls, n: int, exponent: Sequence[int], field: Field, coeff=1) -> HomPoly:
        basis = monomial_basis(n, sum(exponent))
        c = [field.zero] * len(basis)
        c[basis.index(exponent)] = field(coeff)
        return cls(basis, c, field)

    @classmethod
    def basis_element(cls, n: int, d: int, i: int, field: Field) -> HomPoly:
        basis = monomial_basis(n, d)
        c = [field.zero] * len(basis)
        c[i] = field.one
        return cls(basis, c, field)

    @classmethod
    def from_terms(cls, n: int, d: int, terms: dict, field: Field) -> HomPoly:
        """Build from ``{exponent tuple: coefficient}``."""
        basis = monomial_basis(n, d)
        c = [field.zero] * len(basis)
        for e, v in terms.items():
            c[basis.index(e)] += field(v)
        return cls(basis, c, field)

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def degree(self) -> int:
        return self.basis.d

    def terms(self) -> dict:
        return {e: c for e, c in zip(self.basis.exponents, self.coeffs) if c}

    def _compatible(self, other: HomPoly):
        if other.field != self.field:
            raise FieldMismatch(f"polynomials over {self.field} and {other.field}")
        if other.basis != self.basis:
            raise DimensionMismatch("polynomials live in different symmetric powers")

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        self._compatible(other)
        return HomPoly(self.basis, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __sub__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        self._compatible(other)
        return HomPoly(self.basis, [a - b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __neg__(self):
        return HomPoly(self.basis, [-a for a in self.coeffs], self.field)

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            return multiply(self, other)
        c = self.field(other)
        return HomPoly(self.basis, [c * a for a in self.coeffs], self.field)

    def __rmul__(self, other):
        c = self.field(other)
        return HomPoly(self.basis, [c * a for a in self.coeffs], self.field)

    def __call__(self, v: Sequence):
        return evaluate(self, v)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.field == other.field and self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, self.coeffs))

    def __repr__(self):
        terms = [f"{self.field.format(c)}*{monomial_label(e)}" for e, c in self.terms().items()]
        return f"HomPoly({' + '.join(terms) or '0'}, {self.field.tag})"

    def to_json(self) -> dict:
        return {
            "basis": {"n": self.n, "d": self.degree},
            "field": self.field.tag,
            "coeffs": [self.field.format(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict, field: Field | None = None) -> HomPoly:
        from .fields import field_from_tag

        if field is None:
            field = field_from_tag(obj["field"])
        basis = monomial_basis(obj["basis"]["n"], obj["basis"]["d"])
        return cls(basis, obj["coeffs"], field)


def _monomial_value(e: Sequence[int], v: Sequence, one):
    out = one
    for x, k in zip(v, e):
        if k:
            out = out * x**k
    return out


def evaluate(f: HomPoly, v: Sequence):
    """Value of ``f`` at the point ``v``; the empty product is 1, so degree 0 gives the constant."""
    if len(v) != f.n:
        raise DimensionMismatch(f"point of length {len(v)} for a polynomial in {f.n} variables")
    field = f.field
    v = [field(x) for x in v]
    total = field.zero
    for e, c in zip(f.basis.exponents, f.coeffs):
        if c:
            total = total + c * _monomial_value(e, v, field.one)
    return total


def monomial_values(n: int, d: int, v: Sequence, field: Field) -> tuple:
    """Values of every basis monomial of degree ``d`` at ``v``."""
    v = [field(x) for x in v]
    return tuple(_monomial_value(e, v, field.one) for e in monomial_basis(n, d).exponents)


def _poly_mul(p: dict, q: dict, zero) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, zero) + c1 * c2
    return out


def multiply(f: HomPoly, g: HomPoly) -> HomPoly:
    if f.field != g.field:
        raise FieldMismatch(f"polynomials over {f.field} and {g.field}")
    if f.n != g.n:
        raise DimensionMismatch(f"polynomials in {f.n} and {g.n} variables")
    prod = _poly_mul(f.terms(), g.terms(), f.field.zero)
    return HomPoly.from_terms(f.n, f.degree + g.degree, prod, f.field)


def _linear_power(row: Sequence, k: int, field: Field) -> dict:
    """``(sum_j row[j] * x_j) ** k`` expanded by the multinomial theorem."""
    n = len(row)
    out = {}
    kf = factorial(k)
    for m in _exponents(n, k):
        c = kf
        for mj in m:
            c //= factorial(mj)
        coeff = field(c)
        for a, mj in zip(row, m):
            if mj:
                coeff = coeff * a**mj
        if coeff:
            out[m] = coeff
    return out


def induced_matrix(A: Matrix, d: int) -> Matrix:
    """Matrix of ``f -> f o A`` on degree-``d`` polynomials, in the monomial basis.

    Column ``j`` holds the coordinates of the image of basis monomial ``j``,
    obtained by substituting ``x_i -> sum_j A[i, j] x_j`` and expanding.  For
    ``d == 1`` this is ``A.T``.
    """
    if not A.is_square:
        raise DimensionMismatch("induced map of a non-square matrix")
    n, field = A.nrows, A.field
    basis = monomial_basis(n, d)
    zero = field.zero
    # cache (row index, power) -> expanded polynomial
    powers: dict[tuple[int, int], dict] = {}
    columns = []
    for e in basis.exponents:
        poly = {(0,) * n: field.one}
        for i, k in enumerate(e):
            if k:
                key = (i, k)
                if key not in powers:
                    powers[key] = _linear_power(A.row(i), k, field)
                poly = _poly_mul(poly, powers[key], zero)
        col = [zero] * len(basis)
        for m, c in poly.items():
            col[basis.index(m)] = col[basis.index(m)] + c
        columns.append(col)
    return Matrix.from_columns(columns, field)


def apply_induced(A: Matrix, f: HomPoly) -> HomPoly:
    """The polynomial ``v -> f(A v)``."""
    M = induced_matrix(A, f.degree)
    return HomPoly(f.basis, M.apply(f.coeffs), f.field)
