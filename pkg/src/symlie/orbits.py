"""Seed pairs over F_p, their GL_n(F_p) conjugation orbits, and iso-class counts.

Everything here is generate-and-filter over the full finite sets, so it is
only meant for small ``n`` and ``p`` and is guarded by size budgets.  Pairs are
handled internally as integer tuples ``(A row-major, w)`` and ordered
lexicographically by that key.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field
from itertools import product

from .analysis import DEFAULT_ISO_BUDGET, brute_force_iso, gl_order
from .bracket import SeedPair, structure_constants, validate_seed
from .errors import BudgetExceeded
from .fields import GF, PrimeField
from .linalg import Matrix, kernel

DEFAULT_ENUM_BUDGET = 10**7

IntPair = tuple[tuple[int, ...], tuple[int, ...]]


def _matvec(A, w, n, p):
    return tuple(sum(A[i * n + j] * w[j] for j in range(n)) % p for i in range(n))


def _matmul(A, B, n, p):
    return tuple(sum(A[i * n + k] * B[k * n + j] for k in range(n)) % p for i in range(n) for j in range(n))


def _is_eigen(A, w, n, p) -> bool:
    j = next((i for i, x in enumerate(w) if x), None)
    if j is None:
        return True
    Aw = _matvec(A, w, n, p)
    lam = Aw[j] * pow(w[j], -1, p) % p
    return all((a - lam * x) % p == 0 for a, x in zip(Aw, w))


def _check_enum_budget(n, p, budget):
    size = p ** (n * n + n)
    if size > budget:
        raise BudgetExceeded(f"{size} candidate pairs exceed the budget {budget}")


def _int_pairs(n: int, p: int, include_zero_w: bool) -> list[IntPair]:
    zero = (0,) * n
    out = []
    for A in product(range(p), repeat=n * n):
        for w in product(range(p), repeat=n):
            if w == zero and not include_zero_w:
                continue
            if _is_eigen(A, w, n, p):
                out.append((A, w))
    return out


def _to_seed(pair: IntPair, n: int, F: PrimeField) -> SeedPair:
    A, w = pair
    return validate_seed(Matrix([A[i * n : (i + 1) * n] for i in range(n)], F), w)


def seed_key(seed: SeedPair) -> IntPair:
    """Integer key ``(A row-major, w)`` of a seed over a prime field."""
    return tuple(x.value for x in seed.A.entries()), tuple(x.value for x in seed.w)


def enumerate_M(n: int, p: int, include_zero_w: bool = False, budget: int = DEFAULT_ENUM_BUDGET) -> list[SeedPair]:
    """All ``(A, w)`` over ``F_p`` with ``w`` an eigenvector of ``A``, in lexicographic order.

    ``w = 0`` is included only when ``include_zero_w`` is set.
    """
    _check_enum_budget(n, p, budget)
    F = GF(p)
    return [_to_seed(pair, n, F) for pair in _int_pairs(n, p, include_zero_w)]


def _gl_elements(n: int, p: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs ``(T, T^-1)`` for every ``T`` in ``GL_n(F_p)``, as flat integer tuples."""
    F = GF(p)
    from .linalg import inverse, is_invertible

    out = []
    for flat in product(range(p), repeat=n * n):
        M = Matrix([flat[i * n : (i + 1) * n] for i in range(n)], F)
        if is_invertible(M):
            inv = tuple(x.value for x in inverse(M).entries())
            out.append((flat, inv))
    return out


def _act(T, Tinv, pair: IntPair, n, p) -> IntPair:
    A, w = pair
    return _matmul(_matmul(T, A, n, p), Tinv, n, p), _matvec(T, w, n, p)


@dataclass(frozen=True)
class OrbitReport:
    n: int
    p: int
    include_zero_w: bool
    pair_count: int
    orbit_count: int
    representatives: list[SeedPair] = dc_field(repr=False)
    orbit_sizes: list[int] = dc_field(repr=False)
    group_order: int = 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "include_zero_w": self.include_zero_w,
            "pair_count": self.pair_count,
            "orbit_count": self.orbit_count,
            "group_order": self.group_order,
            "orbits": [
                {"A": [list(k) for k in _rows(seed_key(s)[0], self.n)], "w": list(seed_key(s)[1]), "size": size}
                for s, size in zip(self.representatives, self.orbit_sizes)
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "A", "w", "size"])
        for k, (s, size) in enumerate(zip(self.representatives, self.orbit_sizes)):
            A, w = seed_key(s)
            writer.writerow([k, " ".join(map(str, A)), " ".join(map(str, w)), size])
        return buf.getvalue()


def _rows(flat, n):
    return [flat[i * n : (i + 1) * n] for i in range(n)]


def _orbit_partition(n, p, include_zero_w, budget, gl_budget):
    _check_enum_budget(n, p, budget)
    if gl_order(n, p) > gl_budget:
        raise BudgetExceeded(f"|GL_{n}(F_{p})| = {gl_order(n, p)} exceeds the budget {gl_budget}")
    pairs = _int_pairs(n, p, include_zero_w)
    group = _gl_elements(n, p)
    seen: set = set()
    orbits = []
    for pair in pairs:  # already in lexicographic order
        if pair in seen:
            continue
        orbit = {_act(T, Tinv, pair, n, p) for T, Tinv in group}
        seen |= orbit
        orbits.append((pair, len(orbit)))
    return pairs, orbits, len(group)


def gl_orbits(
    n: int,
    p: int,
    include_zero_w: bool = False,
    budget: int = DEFAULT_ENUM_BUDGET,
    gl_budget: int = DEFAULT_ISO_BUDGET,
) -> OrbitReport:
    """Partition the seed pairs over ``F_p`` into ``T . (A, w) = (T A T^-1, T w)`` orbits.

    Each representative is the lexicographically least pair of its orbit.
    """
    pairs, orbits, order = _orbit_partition(n, p, include_zero_w, budget, gl_budget)
    F = GF(p)
    return OrbitReport(
        n,
        p,
        include_zero_w,
        len(pairs),
        len(orbits),
        [_to_seed(rep, n, F) for rep, _ in orbits],
        [size for _, size in orbits],
        order,
    )


def are_conjugate(s1: SeedPair, s2: SeedPair) -> bool:
    """Exhaustive search for ``T`` with ``T . s1 = s2``."""
    n, p = s1.n, s1.field.p
    target = seed_key(s2)
    key = seed_key(s1)
    return any(_act(T, Tinv, key, n, p) == target for T, Tinv in _gl_elements(n, p))


def eigendirections(A: Matrix) -> list[tuple]:
    """One representative per line of eigenvectors of ``A`` over ``F_p``.

    Representatives are normalized so that their first nonzero coordinate is 1.
    An eigenspace of dimension ``m`` contributes ``(p**m - 1) / (p - 1)`` lines.
    """
    F = A.field
    if not isinstance(F, PrimeField):
        raise ValueError("eigendirections enumerates over a prime field")
    n, p = A.nrows, F.p
    out = []
    for lam in range(p):
        K = kernel(A - Matrix.identity(n, F) * lam)
        basis = K.vectors
        m = len(basis)
        for coeffs in product(range(p), repeat=m):
            first = next((c for c in coeffs if c), None)
            if first != 1:
                continue
            v = [F.zero] * n
            for c, b in zip(coeffs, basis):
                if c:
                    v = [x + c * y for x, y in zip(v, b)]
            out.append(tuple(v))
    return out


@dataclass(frozen=True)
class IsoClassReport:
    n: int
    p: int
    d: int
    include_zero_w: bool
    orbit_count: int
    class_count: int
    classes: list[list[int]]
    orbits: OrbitReport = dc_field(repr=False)

    @property
    def inequality_holds(self) -> bool:
        return self.class_count <= self.orbit_count

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "d": self.d,
            "include_zero_w": self.include_zero_w,
            "orbit_count": self.orbit_count,
            "class_count": self.class_count,
            "inequality_holds": self.inequality_holds,
            "classes": self.classes,
        }


def iso_classes(
    n: int,
    p: int,
    d: int,
    include_zero_w: bool = False,
    budget: int = DEFAULT_ENUM_BUDGET,
    iso_budget: int = DEFAULT_ISO_BUDGET,
) -> IsoClassReport:
    """Group the orbit representatives by isomorphism of their degree-``d`` tables.

    ``classes`` lists, per class, the indices of orbit representatives in it.
    """
    report = gl_orbits(n, p, include_zero_w, budget, iso_budget)
    tables = [structure_constants(s, d) for s in report.representatives]
    classes: list[list[int]] = []
    for k, t in enumerate(tables):
        for cls in classes:
            if brute_force_iso(tables[cls[0]], t, iso_budget) is not None:
                cls.append(k)
                break
        else:
            classes.append([k])
    return IsoClassReport(n, p, d, include_zero_w, report.orbit_count, len(classes), classes, report)


def iso_class_count(
    n: int,
    p: int,
    d: int,
    include_zero_w: bool = False,
    budget: int = DEFAULT_ENUM_BUDGET,
    iso_budget: int = DEFAULT_ISO_BUDGET,
) -> tuple[int, int, bool]:
    """``(class_count, orbit_count, class_count <= orbit_count)``."""
    rep = iso_classes(n, p, d, include_zero_w, budget, iso_budget)
    return rep.class_count, rep.orbit_count, rep.inequality_holds
