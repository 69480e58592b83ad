"""Exact scalar fields: the rationals, the Gaussian rationals and prime fields.

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
and residues mod p get small immutable classes with the usual operator
overloads.  Python ``int`` is accepted everywhere as the image of the integers;
any other cross-field combination raises :class:`FieldMismatch`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Integral

from .errors import FieldMismatch


def _is_int(x) -> bool:
    return isinstance(x, Integral) and not isinstance(x, bool)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, (GaussianRational, Residue)) or isinstance(im, (GaussianRational, Residue)):
            raise FieldMismatch("parts of a Gaussian rational must be rational")
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if _is_int(other):
            return GaussianRational(other)
        if isinstance(other, (Fraction, Residue)):
            raise FieldMismatch(f"cannot combine Gaussian rational with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not _is_int(k):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = GaussianRational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if _is_int(other):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return QQi.format(self)


class Residue:
    """A residue class modulo a prime ``p``, stored as ``0 <= value < p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "value", int(value) % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"cannot combine residues mod {self.p} and mod {other.p}")
            return other.value
        if _is_int(other):
            return other
        if isinstance(other, (Fraction, GaussianRational)):
            raise FieldMismatch(f"cannot combine residue mod {self.p} with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if not _is_int(k):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if _is_int(other):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return f"{self.value} mod {self.p}"


class Field:
    """Descriptor for one of the supported exact fields."""

    tag: str
    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def sqrt(self, x):
        """A square root of ``x`` inside the field, or ``None``."""
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    def __repr__(self):
        return self.tag

    def __reduce__(self):
        return (field_from_tag, (self.tag,))


class RationalField(Field):
    tag = "Q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if _is_int(x):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (GaussianRational, Residue)):
            raise FieldMismatch(f"{x!r} is not a rational")
        raise TypeError(f"cannot interpret {x!r} as a rational")

    def contains(self, x):
        return isinstance(x, Fraction)

    def parse(self, s):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {s!r}") from exc

    def format(self, x):
        return str(self(x))

    def sqrt(self, x):
        return _rational_sqrt(self(x))


_GAUSS_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class GaussianField(Field):
    tag = "Qi"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, GaussianRational):
            return x
        if _is_int(x):
            return GaussianRational(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):  # explicit embedding of Q
            return GaussianRational(x)
        if isinstance(x, Residue):
            raise FieldMismatch(f"{x!r} is not a Gaussian rational")
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")

    def contains(self, x):
        return isinstance(x, GaussianRational)

    def parse(self, s):
        t = s.replace(" ", "")
        if not t:
            raise ValueError("empty Gaussian rational")
        if not t.endswith("i"):
            if not _GAUSS_RE.match(t):
                raise ValueError(f"malformed Gaussian rational {s!r}")
            return GaussianRational(Fraction(t))
        body = t[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "0", body
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        if not (_GAUSS_RE.match(re_part) and _GAUSS_RE.match(im_part)):
            raise ValueError(f"malformed Gaussian rational {s!r}")
        return GaussianRational(Fraction(re_part), Fraction(im_part))

    def format(self, x):
        x = self(x)
        if x.im == 0:
            return str(x.re)
        sign = "+" if x.im > 0 else "-"
        return f"{x.re}{sign}{abs(x.im)}i"

    def sqrt(self, x):
        # (u + vi)^2 = a + bi  <=>  u^2 = (a + r)/2, v^2 = (r - a)/2, 2uv = b, r = |z|
        x = self(x)
        a, b = x.re, x.im
        r = _rational_sqrt(a * a + b * b)
        if r is None:
            return None
        u = _rational_sqrt((a + r) / 2)
        v = _rational_sqrt((r - a) / 2)
        if u is None or v is None:
            return None
        if b < 0:
            v = -v
        root = GaussianRational(u, v)
        assert root * root == x
        return root


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_int(p) or not _is_prime(p):
            raise ValueError(f"{p!r} is not a prime")
        self.p = int(p)
        self.characteristic = self.p
        self.tag = f"Fp({self.p})"

    def __call__(self, x):
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch(f"residue mod {x.p} is not in {self.tag}")
            return x
        if _is_int(x):
            return Residue(x, self.p)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (Fraction, GaussianRational)):
            raise FieldMismatch(f"{x!r} is not an element of {self.tag}")
        raise TypeError(f"cannot interpret {x!r} in {self.tag}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def contains(self, x):
        return isinstance(x, Residue) and x.p == self.p

    def parse(self, s):
        t = s.strip()
        if "mod" in t:
            left, _, right = t.partition("mod")
            if int(right) != self.p:
                raise FieldMismatch(f"{s!r} is not an element of {self.tag}")
            t = left.strip()
        try:
            q = Fraction(t)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed residue {s!r}") from exc
        if q.denominator % self.p == 0:
            raise ValueError(f"{s!r} has a denominator divisible by {self.p}")
        return Residue(q.numerator, self.p) / Residue(q.denominator, self.p)

    def format(self, x):
        return str(self(x))

    def sqrt(self, x):
        x = self(x)
        for r in range(self.p):
            if (r * r - x.value) % self.p == 0:
                return Residue(r, self.p)
        return None

    def elements(self):
        return [Residue(r, self.p) for r in range(self.p)]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


QQ = RationalField()
QQi = GaussianField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


_FP_RE = re.compile(r"^(?:Fp\((\d+)\)|F(\d+)|GF\((\d+)\))$")


def field_from_tag(tag: str, p: int | None = None) -> Field:
    """Look up a field by its tag: ``Q``, ``Qi``, ``Fp(5)`` (also ``F5``, ``GF(5)``, or ``Fp`` with ``p``)."""
    t = tag.strip()
    if t == "Q":
        return QQ
    if t == "Qi":
        return QQi
    if t == "Fp":
        if p is None:
            raise ValueError("field Fp needs a prime p")
        return GF(p)
    m = _FP_RE.match(t)
    if m:
        q = int(next(g for g in m.groups() if g))
        if p is not None and p != q:
            raise ValueError(f"conflicting primes {q} and {p}")
        return GF(q)
    raise ValueError(f"unknown field tag {tag!r}")


def field_of(x) -> Field:
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, GaussianRational):
        return QQi
    if isinstance(x, Residue):
        return GF(x.p)
    raise TypeError(f"{x!r} is not a field scalar")


I = GaussianRational(0, 1)
