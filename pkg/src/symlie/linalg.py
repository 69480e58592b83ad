"""Dense exact matrices and the handful of elimination routines built on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, Singular
from .fields import Field, PrimeField, RationalField, field_from_tag


class Matrix:
    """An immutable ``rows x cols`` matrix over a single exact field.

    Entries are held row-major as a tuple of row tuples.  ``Matrix`` supports
    ``+``, ``-``, ``@`` (matrix product, or matrix-vector product when the right
    operand is a plain sequence) and scalar ``*``.
    """

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, rows: Iterable[Iterable], field: Field, ncols: int | None = None):
        data = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_rows", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, rows: tuple, field: Field, ncols: int) -> Matrix:
        # trusted constructor: rows already tuples of field elements
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "nrows", len(rows))
        object.__setattr__(m, "ncols", ncols)
        object.__setattr__(m, "_rows", rows)
        return m

    @classmethod
    def identity(cls, n: int, field: Field) -> Matrix:
        one, zero = field.one, field.zero
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), field, n)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> Matrix:
        zero = field.zero
        return cls._raw(tuple((zero,) * cols for _ in range(rows)), field, cols)

    @classmethod
    def diag(cls, entries: Sequence, field: Field) -> Matrix:
        n = len(entries)
        zero = field.zero
        return cls._raw(
            tuple(tuple(field(entries[i]) if i == j else zero for j in range(n)) for i in range(n)), field, n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field) -> Matrix:
        if not columns:
            raise DimensionMismatch("no columns given")
        return cls(zip(*columns), field, ncols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entries(self) -> list:
        """Row-major flat list of entries."""
        return [x for row in self._rows for x in row]

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> Matrix:
        return Matrix._raw(tuple(zip(*self._rows)) if self.nrows else (), self.field, self.nrows)

    def _check(self, other: Matrix):
        if other.field != self.field:
            raise FieldMismatch(f"matrices over {self.field} and {other.field}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)), self.field, self.ncols
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)), self.field, self.ncols
        )

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._rows), self.field, self.ncols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        c = self.field(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._rows), self.field, self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            zero = self.field.zero
            return Matrix._raw(
                tuple(tuple(_dot(r, c, zero) for c in cols) for r in self._rows), self.field, other.ncols
            )
        return self.apply(other)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        v = [self.field(x) for x in v]
        zero = self.field.zero
        return tuple(_dot(r, v, zero) for r in self._rows)

    def __pow__(self, k: int):
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        result, base = Matrix.identity(self.nrows, self.field), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.field.tag, self.ncols, self._rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(self.field.format(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}], {self.field.tag})"

    def to_json(self) -> dict:
        return {"field": self.field.tag, "rows": [[self.field.format(x) for x in r] for r in self._rows]}

    @classmethod
    def from_json(cls, obj: dict, field: Field | None = None) -> Matrix:
        if field is None:
            field = field_from_tag(obj["field"])
        rows = obj["rows"]
        return cls(rows, field, ncols=len(rows[0]) if rows else 0)


def _dot(r, c, zero):
    s = zero
    for a, b in zip(r, c):
        if a and b:
            s = s + a * b
    return s


def vector(entries: Iterable, field: Field) -> tuple:
    return tuple(field(x) for x in entries)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank; the pivot is the first nonzero entry in column order."""
    reduced, pivots = _rref_rows([list(r) for r in m.rows], m.ncols, m.field)
    return Matrix._raw(tuple(tuple(r) for r in reduced), m.field, m.ncols), len(pivots)


def _rref_rows(rows: list[list], ncols: int, field: Field) -> tuple[list[list], list[int]]:
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.one / rows[r][c]
        pivot_row = [x * inv for x in rows[r]]
        rows[r] = pivot_row
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient_dim`` held as an RREF basis (one basis vector per row)."""

    ambient_dim: int
    basis: Matrix

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def vectors(self) -> tuple[tuple, ...]:
        return self.basis.rows

    def contains(self, v: Sequence) -> bool:
        return in_span(v, self)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    @classmethod
    def zero(cls, ambient_dim: int, field: Field) -> Subspace:
        return cls(ambient_dim, Matrix._raw((), field, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int, field: Field) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim, field))


def span(vectors: Iterable[Sequence], ambient_dim: int, field: Field) -> Subspace:
    rows = [[field(x) for x in v] for v in vectors]
    for v in rows:
        if len(v) != ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a space of dimension {ambient_dim}")
    reduced, pivots = _rref_rows(rows, ambient_dim, field)
    return Subspace(ambient_dim, Matrix._raw(tuple(tuple(r) for r in reduced[: len(pivots)]), field, ambient_dim))


def in_span(v: Sequence, space: Subspace) -> bool:
    """Membership test by reduction against the RREF basis."""
    if len(v) != space.ambient_dim:
        raise DimensionMismatch("vector length does not match the ambient dimension")
    field = space.field
    w = [field(x) for x in v]
    for row in space.vectors:
        c = next(j for j, x in enumerate(row) if x)
        if w[c]:
            f = w[c]
            w = [a - f * b for a, b in zip(w, row)]
    return not any(w)


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}``."""
    field = m.field
    reduced, pivots = _rref_rows([list(r) for r in m.rows], m.ncols, field)
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [field.zero] * m.ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return span(basis, m.ncols, field)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.nrows
    field = m.field
    one, zero = field.one, field.zero
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m.rows)]
    reduced, pivots = _rref_rows(aug, 2 * n, field)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise Singular("matrix is singular")
    return Matrix._raw(tuple(tuple(r[n:]) for r in reduced), field, n)


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution ``x`` of ``m x = b`` (free variables set to zero), or ``None``."""
    field = m.field
    if len(b) != m.nrows:
        raise DimensionMismatch("right-hand side length does not match")
    aug = [list(r) + [field(x)] for r, x in zip(m.rows, b)]
    reduced, pivots = _rref_rows(aug, m.ncols + 1, field)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [field.zero] * m.ncols
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][m.ncols]
    return tuple(x)


def nilpotency_index(m: Matrix) -> int | None:
    """Smallest ``k >= 1`` with ``m**k == 0``, or ``None`` if ``m`` is not nilpotent.

    By Cayley-Hamilton a nilpotent ``n x n`` matrix has ``m**n == 0``, so at most
    ``n`` powers are formed.
    """
    if not m.is_square:
        raise DimensionMismatch("nilpotency of a non-square matrix")
    n = m.nrows
    power = m
    for k in range(1, max(n, 1) + 1):
        if power.is_zero():
            return k
        power = power @ m
    return None


def is_invertible(m: Matrix) -> bool:
    return m.is_square and rank(m) == m.nrows


def sparse_rank(rows: Iterable[dict], field: Field) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``.

    Rows are reduced one at a time against the pivots found so far, so long
    systems with few independent rows stay cheap.  Over Q the work is done
    fraction-free on integer rows, over F_p on plain residues.
    """
    if isinstance(field, RationalField):
        return _sparse_rank_integer(rows)
    if isinstance(field, PrimeField):
        return _sparse_rank_mod_p(rows, field.p)
    one = field.one
    pivots: dict = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = one / r[c]
                pivots[c] = {k: v * inv for k, v in r.items()}
                break
            f = r.pop(c)
            for k, v in piv.items():
                if k == c:
                    continue
                old = r.get(k)
                nv = -(f * v) if old is None else old - f * v
                if nv:
                    r[k] = nv
                else:
                    del r[k]
    return len(pivots)


def _sparse_rank_integer(rows: Iterable[dict]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        items = [(c, Fraction(v)) for c, v in row.items() if v]
        if not items:
            continue
        den = lcm(*(v.denominator for _, v in items))
        r = {c: v.numerator * (den // v.denominator) for c, v in items}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                g = gcd(*r.values())
                pivots[c] = {k: v // g for k, v in r.items()}
                break
            a, b = piv[c], r[c]
            # r <- a r - b piv, which clears column c
            new = {k: a * v for k, v in r.items() if k != c}
            for k, v in piv.items():
                if k != c:
                    nv = new.get(k, 0) - b * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
            if new:
                g = gcd(*new.values())
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
            r = new
    return len(pivots)


def _sparse_rank_mod_p(rows: Iterable[dict], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: int(v) % p for c, v in row.items() if int(v) % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r.pop(c)
            for k, v in piv.items():
                if k != c:
                    nv = (r.get(k, 0) - f * v) % p
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
    return len(pivots)
