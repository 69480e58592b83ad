"""Classification of the algebras built from 2x2 seeds over Q(i) (or Q).

A seed is brought to Jordan normal form by conjugation (an isomorphism of
the resulting algebras), and then ``y0`` is rescaled so that the brackets
match one of the reference families:

* ``G1``:      ``[y0, yi] = yi``
* ``G2(c)``:   ``[y0, yi] = c**(i-1) * yi``
* ``G3(c)``:   ``[y0, yi] = c**(i-1) * sum_j binom(d-i, j) c**j * y_(d-j)``
* ``Abelian``

Seeds ``(diag(0, mu), e1)`` with ``mu != 0`` and ``d >= 2`` produce an algebra
with a single nonzero bracket ``[y0, yd]`` and a center of dimension ``d - 1``.
That fits none of the families above and is reported as ``OutsideFamilies``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .analysis import Fingerprint, HomWitness, center, conjugated_iso, fingerprint, verify_hom
from .bracket import LieTable, SeedPair, structure_constants
from .errors import DimensionMismatch, EigenvaluesNotInField, NotAnEigenvector
from .fields import Field, QQi
from .linalg import Matrix, inverse, kernel, solve

FAMILIES = ("Abelian", "G1", "G2", "G3", "OutsideFamilies")


@dataclass(frozen=True)
class JordanForm2:
    """``A = T @ J @ T^-1`` with ``J`` diagonal or a single Jordan block."""

    kind: str  # "diagonal" or "jordan_block"
    eigenvalues: tuple
    J: Matrix
    T: Matrix

    @property
    def is_scalar(self) -> bool:
        return self.kind == "diagonal" and self.eigenvalues[0] == self.eigenvalues[1]


def _eigvec(A: Matrix, lam) -> tuple:
    K = kernel(A - Matrix.identity(2, A.field) * lam)
    return K.vectors[0]


def jordan_form_2x2(A: Matrix, w=None) -> JordanForm2:
    """Jordan normal form of a 2x2 matrix with exact eigenvalues.

    If a nonzero eigenvector ``w`` is given it becomes the first column of
    ``T`` and its eigenvalue comes first.  Otherwise the roots are ordered as
    ``((tr + s)/2, (tr - s)/2)`` with ``s`` the field's canonical square root
    of the discriminant.  Raises :class:`EigenvaluesNotInField` when the
    discriminant has no square root in the field.
    """
    if A.shape != (2, 2):
        raise DimensionMismatch("jordan_form_2x2 needs a 2x2 matrix")
    F = A.field
    if F.is_finite:
        raise ValueError("2x2 classification works in characteristic 0 only")
    if w is not None:
        w = tuple(F(x) for x in w)
        if not any(w):
            w = None
    tr = A[0, 0] + A[1, 1]
    det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    disc = tr * tr - 4 * det
    s = F.sqrt(disc)
    if s is None:
        raise EigenvaluesNotInField(f"eigenvalues of {A!r} are not in {F.tag}")
    I2 = Matrix.identity(2, F)
    if w is not None:
        Aw = A.apply(w)
        j = 0 if w[0] else 1
        lam_w = Aw[j] / w[j]
        if Aw != tuple(lam_w * x for x in w):
            raise NotAnEigenvector("w is not an eigenvector of A")

    if not disc:
        lam = tr / 2
        if A == I2 * lam:
            if w is None:
                T = I2
            else:
                other = (F.zero, F.one) if w[0] else (F.one, F.zero)
                T = Matrix.from_columns([w, other], F)
            return JordanForm2("diagonal", (lam, lam), I2 * lam, T)
        s1 = w if w is not None else _eigvec(A, lam)
        s2 = solve(A - I2 * lam, s1)
        T = Matrix.from_columns([s1, s2], F)
        J = Matrix([[lam, 1], [0, lam]], F)
        return JordanForm2("jordan_block", (lam, lam), J, T)

    r1, r2 = (tr + s) / 2, (tr - s) / 2
    if w is not None:
        l1 = lam_w
        l2 = r2 if l1 == r1 else r1
        v1 = w
    else:
        l1, l2 = r1, r2
        v1 = _eigvec(A, l1)
    v2 = _eigvec(A, l2)
    T = Matrix.from_columns([v1, v2], F)
    return JordanForm2("diagonal", (l1, l2), Matrix.diag([l1, l2], F), T)


@dataclass(frozen=True)
class ClassLabel:
    family: str
    parameter: object = None
    detail: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("G2", "G3"):
            if self.parameter is None or not self.parameter:
                raise ValueError(f"{self.family} needs a nonzero parameter c")
        elif self.parameter is not None:
            raise ValueError(f"{self.family} takes no parameter")

    def to_json(self, field: Field = QQi) -> dict:
        out = {"family": self.family}
        if self.parameter is not None:
            out["c"] = field.format(self.parameter)
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    def __str__(self):
        if self.parameter is not None:
            return f"{self.family}({self.parameter})"
        return self.family


def family_table(label: ClassLabel, d: int, field: Field = QQi) -> LieTable:
    """Reference table on ``y0..yd`` with exactly the family's generating relations."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    if label.family == "OutsideFamilies":
        raise ValueError("OutsideFamilies has no reference table")
    N = d + 1
    zero = field.zero
    consts = {}
    if label.family != "Abelian":
        c = field(label.parameter) if label.parameter is not None else field.one
        for i in range(1, N):
            v = [zero] * N
            if label.family == "G1":
                v[i] = field.one
            elif label.family == "G2":
                v[i] = c ** (i - 1)
            else:
                for j in range(d - i + 1):
                    v[d - j] = v[d - j] + c ** (i - 1) * comb(d - i, j) * c**j
            consts[(0, i)] = v
    return LieTable(N, field, consts, [f"y{i}" for i in range(N)])


@dataclass(frozen=True)
class Classification:
    label: ClassLabel
    witness: HomWitness | None
    jordan: JordanForm2 | None
    center_dim: int | None = None
    fingerprint: Fingerprint | None = None

    def to_json(self) -> dict:
        field = self.witness.map.field if self.witness is not None else QQi
        if self.jordan is not None:
            field = self.jordan.J.field
        out = self.label.to_json(field)
        out["witness"] = None if self.witness is None else self.witness.to_json()
        if self.center_dim is not None:
            out["center_dim"] = self.center_dim
        if self.fingerprint is not None:
            out["fingerprint"] = self.fingerprint.to_json()
        return out


def _rescale_y0(s, N: int, field: Field) -> Matrix:
    return Matrix.diag([s] + [field.one] * (N - 1), field)


def classify(seed: SeedPair, d: int) -> Classification:
    """Classify the degree-``d`` algebra of a 2x2 seed.

    For every family except ``OutsideFamilies`` the result carries a verified
    witness: an isomorphism from ``structure_constants(seed, d)`` onto
    ``family_table(label, d)``.  It is the conjugation to Jordan form (induced
    on degree ``d``) followed by rescaling ``y0``.
    """
    if seed.n != 2:
        raise DimensionMismatch("classification is implemented for 2x2 seeds only")
    if d < 1:
        raise ValueError("degree must be at least 1")
    F = seed.field
    src = structure_constants(seed, d)
    N = d + 1
    if not any(seed.w):
        label = ClassLabel("Abelian")
        return Classification(label, verify_hom(src, family_table(label, d, F), Matrix.identity(N, F)), None)

    jf = jordan_form_2x2(seed.A, seed.w)
    l1, l2 = jf.eigenvalues
    scale = None
    if jf.is_scalar:
        if l1:
            label, scale = ClassLabel("G1"), -(l1**d)
        else:
            label = ClassLabel("Abelian")
    elif jf.kind == "jordan_block":
        if l1:
            label, scale = ClassLabel("G3", l1), -l1
        else:
            label = ClassLabel("Abelian")
    else:
        lam_w, mu = l1, l2
        if not mu:
            label = ClassLabel("Abelian")
        elif not lam_w:
            if d == 1:
                label, scale = ClassLabel("G1"), -mu
            else:
                cdim = center(src).dim
                label = ClassLabel("OutsideFamilies", detail=f"rank-1 ad, center dim {cdim}")
                return Classification(label, None, jf, cdim, fingerprint(src))
        else:
            c = mu / lam_w
            label = ClassLabel("G1") if c == 1 else ClassLabel("G2", c)
            scale = -(lam_w ** (d - 1)) * mu

    if scale is None:
        P = Matrix.identity(N, F)
    else:
        _, conj = conjugated_iso(seed, inverse(jf.T), d)
        P = _rescale_y0(scale, N, F) @ conj.map
    witness = verify_hom(src, family_table(label, d, F), P)
    return Classification(label, witness, jf)
