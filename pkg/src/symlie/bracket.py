"""Seed pairs, the bracket ``[f, g] = g(w) A*(f) - f(w) A*(g)`` and its structure constants."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotAnEigenvector
from .fields import Field, field_from_tag
from .linalg import Matrix
from .sympower import HomPoly, induced_matrix, monomial_basis, monomial_values


@dataclass(frozen=True)
class SeedPair:
    """A square matrix ``A`` with an eigenvector ``w`` and its eigenvalue ``lam``.

    ``degenerate`` is set when ``w`` or ``A`` is zero; such seeds give abelian
    algebras.  Build these through :func:`validate_seed`.
    """

    A: Matrix
    w: tuple
    lam: object
    degenerate: bool

    @property
    def n(self) -> int:
        return self.A.nrows

    @property
    def field(self) -> Field:
        return self.A.field

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.tag,
            "A": [[f.format(x) for x in r] for r in self.A.rows],
            "w": [f.format(x) for x in self.w],
            "lambda": f.format(self.lam),
        }


def validate_seed(A: Matrix, w: Sequence) -> SeedPair:
    """Check that ``w`` is an eigenvector of ``A`` and derive its eigenvalue.

    ``w = 0`` is accepted and gives a degenerate seed with eigenvalue 0.
    Raises :class:`NotAnEigenvector` otherwise.
    """
    if not A.is_square:
        raise DimensionMismatch("seed matrix must be square")
    if len(w) != A.nrows:
        raise DimensionMismatch(f"vector of length {len(w)} for a {A.nrows}x{A.nrows} matrix")
    field = A.field
    w = tuple(field(x) for x in w)
    if not any(w):
        return SeedPair(A, w, field.zero, True)
    Aw = A.apply(w)
    j = next(i for i, x in enumerate(w) if x)
    lam = Aw[j] / w[j]
    if any(a != lam * x for a, x in zip(Aw, w)):
        raise NotAnEigenvector("w is not an eigenvector of A (A w must equal lambda w)")
    return SeedPair(A, w, lam, A.is_zero())


def bracket(seed: SeedPair, d: int, f: HomPoly, g: HomPoly, phi: Matrix | None = None) -> HomPoly:
    """``g(w) * A*(f) - f(w) * A*(g)`` for degree-``d`` polynomials ``f``, ``g``.

    ``phi`` may carry a precomputed ``induced_matrix(seed.A, d)``.
    """
    for h in (f, g):
        if h.field != seed.field:
            raise FieldMismatch(f"polynomial over {h.field} with a seed over {seed.field}")
        if h.degree != d or h.n != seed.n:
            raise DimensionMismatch(f"expected a degree-{d} polynomial in {seed.n} variables")
    if phi is None:
        phi = induced_matrix(seed.A, d)
    gw, fw = g(seed.w), f(seed.w)
    pf, pg = phi.apply(f.coeffs), phi.apply(g.coeffs)
    return HomPoly(f.basis, [gw * a - fw * b for a, b in zip(pf, pg)], seed.field)


class LieTable:
    """Structure constants of an ``N``-dimensional algebra with an alternating product.

    ``constants`` maps ``(i, j)`` with ``i < j`` to the coefficient vector of
    ``[e_i, e_j]``; pairs with zero bracket are omitted.  ``[e_j, e_i]`` is
    ``-[e_i, e_j]`` and ``[e_i, e_i] = 0`` by construction.
    """

    __slots__ = ("dim", "labels", "field", "constants", "provenance", "_hash")

    def __init__(
        self,
        dim: int,
        field: Field,
        constants: Mapping[tuple[int, int], Sequence] | None = None,
        labels: Sequence[str] | None = None,
        provenance: dict | None = None,
    ):
        labels = list(labels) if labels is not None else [f"e{i + 1}" for i in range(dim)]
        if len(labels) != dim:
            raise DimensionMismatch(f"{len(labels)} labels for dimension {dim}")
        table = {}
        for (i, j), vec in (constants or {}).items():
            if not (0 <= i < j < dim):
                raise ValueError(f"structure constants must be keyed by i < j < dim, got ({i}, {j})")
            if len(vec) != dim:
                raise DimensionMismatch(f"bracket vector of length {len(vec)} in dimension {dim}")
            v = tuple(field(x) for x in vec)
            if any(v):
                table[(i, j)] = v
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "constants", dict(sorted(table.items())))
        object.__setattr__(self, "provenance", provenance)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LieTable is immutable")

    def basis_bracket(self, i: int, j: int) -> tuple:
        if i == j:
            return (self.field.zero,) * self.dim
        if i < j:
            return self.constants.get((i, j), (self.field.zero,) * self.dim)
        v = self.constants.get((j, i))
        if v is None:
            return (self.field.zero,) * self.dim
        return tuple(-x for x in v)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """Bracket of two coefficient vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("coefficient vector length does not match the table dimension")
        zero = self.field.zero
        out = [zero] * self.dim
        for (i, j), v in self.constants.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                for k, a in enumerate(v):
                    if a:
                        out[k] = out[k] + c * a
        return tuple(out)

    def unit(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))

    def is_abelian(self) -> bool:
        return not self.constants

    def nonzero_brackets(self) -> dict[tuple[int, int], tuple]:
        return dict(self.constants)

    def restrict(self, indices: Sequence[int]) -> LieTable:
        """Sub-table on a set of basis indices that spans a subalgebra (brackets must stay inside)."""
        pos = {k: a for a, k in enumerate(indices)}
        consts = {}
        for (i, j), v in self.constants.items():
            if i in pos and j in pos:
                if any(x for k, x in enumerate(v) if k not in pos):
                    raise ValueError("indices do not span a subalgebra")
                consts[(pos[i], pos[j])] = [v[k] for k in indices]
        return LieTable(len(indices), self.field, consts, [self.labels[k] for k in indices])

    def __eq__(self, other):
        if not isinstance(other, LieTable):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.constants == other.constants
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.dim, self.field.tag, tuple(self.constants.items())))

    def __repr__(self):
        return f"LieTable(dim={self.dim}, field={self.field.tag}, nonzero={len(self.constants)})"

    def pretty(self) -> str:
        """Human-readable list of the nonzero brackets."""
        lines = []
        fmt = self.field.format
        for (i, j), v in self.constants.items():
            terms = []
            for k, a in enumerate(v):
                if a:
                    terms.append(self.labels[k] if a == 1 else f"({fmt(a)})*{self.labels[k]}")
            lines.append(f"[{self.labels[i]}, {self.labels[j]}] = " + " + ".join(terms))
        return "\n".join(lines) if lines else "(abelian)"

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "field": self.field.tag,
            "constants": [
                {"i": i, "j": j, "coeffs": [{"k": k, "value": fmt(a)} for k, a in enumerate(v) if a]}
                for (i, j), v in self.constants.items()
            ],
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, obj: dict) -> LieTable:
        field = field_from_tag(obj["field"])
        dim = obj["dim"]
        consts = {}
        for entry in obj["constants"]:
            vec = [field.zero] * dim
            for c in entry["coeffs"]:
                vec[c["k"]] = field(c["value"])
            consts[(entry["i"], entry["j"])] = vec
        return cls(dim, field, consts, obj.get("labels"), obj.get("provenance"))

    def digest(self) -> str:
        """Short content hash of the canonical JSON form, labels and provenance excluded."""
        if self._hash is None:
            body = self.to_json()
            body = {"dim": body["dim"], "field": body["field"], "constants": body["constants"]}
            h = hashlib.sha256(json.dumps(body, separators=(",", ":")).encode()).hexdigest()[:16]
            object.__setattr__(self, "_hash", h)
        return self._hash


def _seed_provenance(seed: SeedPair, **extra) -> dict:
    out = {k: v for k, v in seed.to_json().items() if k != "field"}
    out.update(extra)
    return out


def _degree_brackets(A: Matrix, w: Sequence, d: int) -> dict[tuple[int, int], list]:
    n = A.nrows
    N = comb(n + d - 1, d)
    phi = induced_matrix(A, d)
    vals = monomial_values(n, d, w, A.field)
    cols = phi.columns()
    out = {}
    for i in range(N):
        for j in range(i + 1, N):
            vi, vj = vals[i], vals[j]
            if not vi and not vj:
                continue
            out[(i, j)] = [vj * a - vi * b for a, b in zip(cols[i], cols[j])]
    return out


def bracket_table(A: Matrix, w: Sequence, d: int) -> LieTable:
    """Evaluate the bracket formula on degree-``d`` monomials for an arbitrary vector ``w``.

    No eigenvector check is made, so the result need not satisfy the Jacobi
    identity.  Use :func:`structure_constants` for a validated seed.
    """
    if not A.is_square or len(w) != A.nrows:
        raise DimensionMismatch("need a square matrix and a vector of matching length")
    basis = monomial_basis(A.nrows, d)
    w = tuple(A.field(x) for x in w)
    return LieTable(len(basis), A.field, _degree_brackets(A, w, d), basis.labels)


def structure_constants(seed: SeedPair, d: int) -> LieTable:
    """The table of the bracket on degree-``d`` polynomials, in the monomial basis."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    basis = monomial_basis(seed.n, d)
    return LieTable(
        len(basis),
        seed.field,
        _degree_brackets(seed.A, seed.w, d),
        basis.labels,
        provenance=_seed_provenance(seed, d=d),
    )


def graded_table(seed: SeedPair, max_degree: int) -> LieTable:
    """Direct sum of degrees ``0..max_degree``; brackets across different degrees vanish."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    labels: list[str] = []
    consts = {}
    offsets = []
    for d in range(max_degree + 1):
        offsets.append(len(labels))
        labels.extend(monomial_basis(seed.n, d).labels)
    dim = len(labels)
    for d in range(max_degree + 1):
        off = offsets[d]
        for (i, j), v in _degree_brackets(seed.A, seed.w, d).items():
            vec = [seed.field.zero] * dim
            vec[off : off + len(v)] = v
            consts[(off + i, off + j)] = vec
    return LieTable(dim, seed.field, consts, labels, provenance=_seed_provenance(seed, max_degree=max_degree))


def degree_offsets(n: int, max_degree: int) -> list[int]:
    """Block boundaries of :func:`graded_table`: degree ``d`` occupies ``off[d]:off[d + 1]``."""
    out, acc = [0], 0
    for d in range(max_degree + 1):
        acc += comb(n + d - 1, d)
        out.append(acc)
    return out
