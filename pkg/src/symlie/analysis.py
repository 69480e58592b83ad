"""Structural analysis of structure-constant tables.

Jacobi checking, derived and lower central series, centers, ad matrices,
homomorphism verification, the conjugation isomorphism between seeds, a
fingerprint of isomorphism invariants, and exhaustive isomorphism search over
prime fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .bracket import LieTable, SeedPair, structure_constants, validate_seed
from .errors import BudgetExceeded, DimensionMismatch, FieldMismatch
from .fields import PrimeField
from .linalg import Matrix, Subspace, inverse, is_invertible, kernel, rank, sparse_rank, span
from .sympower import induced_matrix

DEFAULT_ISO_BUDGET = 10**6


class Violation(NamedTuple):
    """Basis indices ``(i, j, k)`` where the Jacobi sum is nonzero."""

    i: int
    j: int
    k: int


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def check_alternating_jacobi(t: LieTable) -> Violation | None:
    """Return ``None`` when the table defines a Lie algebra, else the first failing triple.

    Alternation is enforced by :class:`LieTable` itself (only ``i < j`` is
    stored).  For an alternating product the Jacobi identity only needs checking
    on triples of distinct basis indices ``i < j < k``.
    """
    for (i, j) in t.constants:
        if not i < j:
            return Violation(i, j, j)
    N = t.dim
    for i in range(N):
        for j in range(i + 1, N):
            eij = t.basis_bracket(i, j)
            for k in range(j + 1, N):
                s = t.bracket(eij, t.unit(k))
                s = _add(s, t.bracket(t.basis_bracket(j, k), t.unit(i)))
                s = _add(s, t.bracket(t.basis_bracket(k, i), t.unit(j)))
                if any(s):
                    return Violation(i, j, k)
    return None


def is_lie(t: LieTable) -> bool:
    return check_alternating_jacobi(t) is None


def product_space(t: LieTable, U: Subspace, W: Subspace) -> Subspace:
    """``[U, W]``: the span of brackets of basis vectors of ``U`` and ``W``."""
    if U.ambient_dim != t.dim or W.ambient_dim != t.dim:
        raise DimensionMismatch("subspaces do not live in the algebra")
    vecs = [t.bracket(u, w) for u in U.vectors for w in W.vectors]
    return span(vecs, t.dim, t.field)


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    dims: tuple[int, ...]
    terminated_at_zero: bool
    steps: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "dims": list(self.dims),
            "terminated_at_zero": self.terminated_at_zero,
            "steps": self.steps,
        }


def _series(t: LieTable, kind: str) -> tuple[SeriesReport, list[Subspace]]:
    full = Subspace.full(t.dim, t.field)
    terms = [full]
    dims = [t.dim]
    current = full
    while current.dim > 0:
        left = current if kind == "derived" else full
        nxt = product_space(t, left, current)
        dims.append(nxt.dim)
        if nxt.dim == current.dim:
            break
        terms.append(nxt)
        current = nxt
    steps = sum(1 for a, b in zip(dims, dims[1:]) if b < a)
    return SeriesReport(kind, tuple(dims), dims[-1] == 0, steps), terms


def derived_series(t: LieTable) -> SeriesReport:
    """``g, [g, g], [g', g'], ...`` until the dimension stops dropping."""
    return _series(t, "derived")[0]


def lower_central_series(t: LieTable) -> SeriesReport:
    """``g, [g, g], [g, [g, g]], ...`` until the dimension stops dropping."""
    return _series(t, "lower_central")[0]


def derived_algebra(t: LieTable) -> Subspace:
    return product_space(t, Subspace.full(t.dim, t.field), Subspace.full(t.dim, t.field))


def is_solvable(t: LieTable) -> bool:
    return derived_series(t).terminated_at_zero


def is_nilpotent(t: LieTable) -> tuple[bool, int | None]:
    """Whether ``t`` is nilpotent, and its class (number of proper lower-central steps)."""
    rep = lower_central_series(t)
    if rep.terminated_at_zero:
        return True, rep.steps
    return False, None


def ad_matrix(t: LieTable, x: Sequence) -> Matrix:
    """Matrix of ``y -> [x, y]``."""
    if len(x) != t.dim:
        raise DimensionMismatch("element has the wrong length")
    x = [t.field(a) for a in x]
    return Matrix.from_columns([t.bracket(x, t.unit(j)) for j in range(t.dim)], t.field) if t.dim else Matrix.zeros(
        0, 0, t.field
    )


def _centralizer(t: LieTable, vectors: Sequence[Sequence]) -> Subspace:
    # x with [x, v] = 0 for all v: stack the linear maps x -> [x, v]
    rows = []
    for v in vectors:
        cols = [t.bracket(t.unit(i), v) for i in range(t.dim)]
        rows.extend(zip(*cols))
    if not rows:
        return Subspace.full(t.dim, t.field)
    return kernel(Matrix(rows, t.field, ncols=t.dim))


def center(t: LieTable) -> Subspace:
    return _centralizer(t, [t.unit(j) for j in range(t.dim)])


def centralizer(t: LieTable, S: Subspace) -> Subspace:
    return _centralizer(t, S.vectors)


def derivation_dim(t: LieTable) -> int:
    """Dimension of the derivation algebra ``{D : D[x, y] = [Dx, y] + [x, Dy]}``.

    Unknown ``D[k, l]`` sits in column ``k * N + l``; one sparse equation per
    ``(i < j, k)``.
    """
    N = t.dim
    zero = t.field.zero
    br = [[t.basis_bracket(a, b) for b in range(N)] for a in range(N)]
    rows = []
    for i in range(N):
        for j in range(i + 1, N):
            cij = br[i][j]
            for k in range(N):
                row: dict = {}
                for l, c in enumerate(cij):
                    if c:
                        row[k * N + l] = row.get(k * N + l, zero) + c
                for a in range(N):
                    c = br[a][j][k]
                    if c:
                        row[a * N + i] = row.get(a * N + i, zero) - c
                    c = br[i][a][k]
                    if c:
                        row[a * N + j] = row.get(a * N + j, zero) - c
                if row:
                    rows.append(row)
    return N * N - sparse_rank(rows, t.field)


@dataclass(frozen=True)
class HomWitness:
    map: Matrix
    source: str
    target: str
    verified: bool

    def to_json(self) -> dict:
        return {"map": self.map.to_json(), "source": self.source, "target": self.target, "verified": self.verified}


def _is_hom(src: LieTable, dst: LieTable, P: Matrix) -> bool:
    cols = P.columns()
    for i in range(src.dim):
        for j in range(i + 1, src.dim):
            lhs = P.apply(src.basis_bracket(i, j))
            rhs = dst.bracket(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def verify_hom(src: LieTable, dst: LieTable, P: Matrix) -> HomWitness:
    """Check that ``P`` (column ``i`` = image of ``e_i``) is an isomorphism ``src -> dst``."""
    if src.dim != dst.dim or P.shape != (src.dim, src.dim):
        raise DimensionMismatch(f"map of shape {P.shape} between dimensions {src.dim} and {dst.dim}")
    if not (src.field == dst.field == P.field):
        raise FieldMismatch("tables and map must share one field")
    ok = is_invertible(P) and _is_hom(src, dst, P)
    return HomWitness(P, src.digest(), dst.digest(), ok)


def conjugate_seed(seed: SeedPair, T: Matrix) -> SeedPair:
    """``(T A T^-1, T w)``."""
    Tinv = inverse(T)
    return validate_seed(T @ seed.A @ Tinv, T.apply(seed.w))


def conjugated_iso(seed: SeedPair, T: Matrix, d: int) -> tuple[SeedPair, HomWitness]:
    """Conjugate ``seed`` by ``T`` and return the induced isomorphism between the two tables.

    The witness is ``induced_matrix(T^-1, d)``, which maps the table of
    ``seed`` onto the table of the conjugated seed.  (``induced_matrix(T, d)``
    goes the other way because ``(A B)* = B* A*``.)  Raises
    :class:`~symlie.errors.Singular` for singular ``T``.
    """
    Tinv = inverse(T)
    seed2 = validate_seed(T @ seed.A @ Tinv, T.apply(seed.w))
    P = induced_matrix(Tinv, d)
    witness = verify_hom(structure_constants(seed, d), structure_constants(seed2, d), P)
    return seed2, witness


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants; equal fingerprints are necessary for isomorphism."""

    dim: int
    derived_dims: tuple[int, ...]
    lower_central_dims: tuple[int, ...]
    center_dim: int
    derived_dim: int
    derived_centralizer_dim: int
    derivation_dim: int
    ad_rank_counts: tuple[tuple[int, int], ...] | None = None

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "center_dim": self.center_dim,
            "derived_dim": self.derived_dim,
            "derived_centralizer_dim": self.derived_centralizer_dim,
            "derivation_dim": self.derivation_dim,
            "ad_rank_counts": None if self.ad_rank_counts is None else [list(p) for p in self.ad_rank_counts],
        }


AD_HISTOGRAM_LIMIT = 4096


def fingerprint(t: LieTable) -> Fingerprint:
    """Compute a :class:`Fingerprint`.

    Every field is basis independent.  Over a prime field with at most
    ``AD_HISTOGRAM_LIMIT`` elements the full distribution of ``rank(ad x)``
    over all ``x`` is included as well.
    """
    derived = derived_algebra(t)
    hist = None
    if isinstance(t.field, PrimeField) and t.field.p ** t.dim <= AD_HISTOGRAM_LIMIT:
        hist = _ad_rank_histogram(t)
    return Fingerprint(
        dim=t.dim,
        derived_dims=derived_series(t).dims,
        lower_central_dims=lower_central_series(t).dims,
        center_dim=center(t).dim,
        derived_dim=derived.dim,
        derived_centralizer_dim=centralizer(t, derived).dim,
        derivation_dim=derivation_dim(t),
        ad_rank_counts=hist,
    )


def _structure_array(t: LieTable) -> np.ndarray:
    """Full antisymmetric array ``c[i, j, k]`` of integer residues."""
    N = t.dim
    c = np.zeros((N, N, N), dtype=np.int64)
    p = t.field.p
    for (i, j), v in t.constants.items():
        for k, a in enumerate(v):
            c[i, j, k] = a.value
            c[j, i, k] = (-a.value) % p
    return c


def _rank_mod_p(m: np.ndarray, p: int) -> int:
    m = m.copy() % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + nz[0]
        m[[r, pr]] = m[[pr, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        r += 1
        if r == rows:
            break
    return r


def _ad_rank_histogram(t: LieTable) -> tuple[tuple[int, int], ...]:
    p, N = t.field.p, t.dim
    c = _structure_array(t)
    counts: dict[int, int] = {}
    for idx in range(p**N):
        x = np.array([(idx // p ** (N - 1 - e)) % p for e in range(N)], dtype=np.int64)
        # ad_x[k, j] = sum_i x_i c[i, j, k]
        ad = np.einsum("i,ijk->kj", x, c) % p
        r = _rank_mod_p(ad, p) if N else 0
        counts[r] = counts.get(r, 0) + 1
    return tuple(sorted(counts.items()))


# ---------------------------------------------------------------------------
# exhaustive search over prime fields


def gl_order(n: int, p: int) -> int:
    out = 1
    for k in range(n):
        out *= p**n - p**k
    return out


_CHUNK = 1 << 16


def _candidate_chunks(N: int, p: int):
    total = p ** (N * N)
    weights = np.array([p ** (N * N - 1 - e) for e in range(N * N)], dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        yield (idx[:, None] // weights[None, :]) % p


def _hom_mask(P: np.ndarray, c_src: np.ndarray, c_dst: np.ndarray, p: int) -> np.ndarray:
    """Filter a batch ``P`` (B x N x N) down to the maps that respect every basis bracket."""
    N = c_src.shape[0]
    keep = np.arange(P.shape[0])
    for i in range(N):
        for j in range(i + 1, N):
            if keep.size == 0:
                return keep
            Q = P[keep]
            lhs = (Q @ c_src[i, j]) % p  # (B, N)
            outer = Q[:, :, i, None] * Q[:, None, :, j]  # (B, N, N): P[a,i] P[b,j]
            rhs = np.tensordot(outer % p, c_dst, axes=([1, 2], [0, 1])) % p
            keep = keep[np.all(lhs == rhs, axis=1)]
    return keep


def brute_force_iso(t1: LieTable, t2: LieTable, budget: int = DEFAULT_ISO_BUDGET) -> HomWitness | None:
    """Search every ``N x N`` matrix over ``F_p`` for an isomorphism ``t1 -> t2``.

    Candidates are scanned in row-major lexicographic order of their entries
    (entry ``(0, 0)`` most significant), so the witness returned is the
    lexicographically first one.  Returns ``None`` when there is none, which
    proves the tables non-isomorphic over ``F_p``.  Raises
    :class:`BudgetExceeded` if ``|GL_N(F_p)|`` is larger than ``budget``.
    """
    if not isinstance(t1.field, PrimeField) or t1.field != t2.field:
        raise FieldMismatch("exhaustive search needs two tables over the same prime field")
    if t1.dim != t2.dim:
        return None
    N, p = t1.dim, t1.field.p
    if gl_order(N, p) > budget:
        raise BudgetExceeded(f"|GL_{N}(F_{p})| = {gl_order(N, p)} exceeds the budget {budget}")
    if fingerprint(t1) != fingerprint(t2):
        return None
    if N == 0:
        return verify_hom(t1, t2, Matrix.zeros(0, 0, t1.field))
    c1, c2 = _structure_array(t1), _structure_array(t2)
    F = t1.field
    for flat in _candidate_chunks(N, p):
        P = flat.reshape(-1, N, N)
        for b in _hom_mask(P, c1, c2, p):
            M = Matrix(P[b].tolist(), F)
            if is_invertible(M):
                w = verify_hom(t1, t2, M)
                assert w.verified
                return w
    return None
