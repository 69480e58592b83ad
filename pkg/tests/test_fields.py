from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symlie import GF, QQ, QQi, FieldMismatch, GaussianRational, Residue, field_from_tag
from symlie.fields import I

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)
residues7 = st.builds(lambda v: Residue(v, 7), st.integers(0, 6))


@pytest.mark.parametrize("elems", [gaussians, residues7], ids=["Qi", "F7"])
@given(data=st.data())
def test_field_axioms(elems, data):
    a, b, c = data.draw(elems), data.draw(elems), data.draw(elems)
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 * a
    if a:
        assert a * a.inverse() == a / a
        assert (a / a) * b == b


def test_gaussian_arithmetic():
    assert I * I == GaussianRational(-1)
    assert (1 + I) * (1 - I) == GaussianRational(2)
    assert (1 + 2 * I).inverse() == GaussianRational(Fraction(1, 5), Fraction(-2, 5))
    assert I**-1 == -I
    assert (3 + 4 * I).norm() == 25


def test_residue_arithmetic():
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F(3).inverse() == F(5)
    assert F(-1) == F(6)
    assert F(2) ** 3 == F(1)


def test_cross_field_arithmetic_is_rejected():
    with pytest.raises(FieldMismatch):
        Residue(1, 5) + Residue(1, 7)
    with pytest.raises(FieldMismatch):
        Residue(1, 5) + Fraction(1, 2)
    with pytest.raises(FieldMismatch):
        GaussianRational(1) + Residue(1, 5)


@pytest.mark.parametrize(
    "text,value",
    [
        ("i", GaussianRational(0, 1)),
        ("-i", GaussianRational(0, -1)),
        ("2i", GaussianRational(0, 2)),
        ("1+i", GaussianRational(1, 1)),
        ("1/2-3/4i", GaussianRational(Fraction(1, 2), Fraction(-3, 4))),
        ("5", GaussianRational(5)),
    ],
)
def test_gaussian_parse(text, value):
    assert QQi.parse(text) == value


@given(gaussians)
def test_gaussian_format_round_trip(z):
    assert QQi.parse(QQi.format(z)) == z


def test_format_conventions():
    assert QQi.format(GaussianRational(5)) == "5"
    assert QQi.format(I) == "0+1i"
    assert QQ.format(Fraction(-1, 2)) == "-1/2"
    assert GF(5).format(GF(5)(7)) == "2 mod 5"
    assert GF(5).parse("2 mod 5") == GF(5)(2)


def test_exact_square_roots():
    assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert QQ.sqrt(2) is None
    assert QQ.sqrt(-1) is None
    s = QQi.sqrt(QQi(-4))
    assert s * s == QQi(-4)
    s = QQi.sqrt(QQi.parse("3+4i"))
    assert s * s == QQi.parse("3+4i")
    assert QQi.sqrt(QQi(2)) is None
    r = GF(5).sqrt(GF(5)(4))
    assert r * r == GF(5)(4)
    assert GF(5).sqrt(GF(5)(2)) is None


@given(gaussians)
def test_gaussian_sqrt_of_squares(z):
    s = QQi.sqrt(z * z)
    assert s is not None and s * s == z * z


@pytest.mark.parametrize("tag,p", [("Q", None), ("Qi", None), ("Fp", 5), ("Fp(5)", None), ("F5", None), ("GF(5)", None)])
def test_field_tags(tag, p):
    F = field_from_tag(tag, p)
    assert field_from_tag(F.tag) == F


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        field_from_tag("Fp")
