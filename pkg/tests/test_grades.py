"""Exact rational grades and the componentwise partial order."""
from fractions import Fraction

import pytest

from perspaces.grades import Grade, diagonal, parse_grade, rational


def test_rational_accepts_common_spellings():
    assert rational(3) == Fraction(3)
    assert rational("-3") == Fraction(-3)
    assert rational("0.25") == Fraction(1, 4)
    assert rational("7/4") == Fraction(7, 4)
    assert rational(Fraction(2, 6)) == Fraction(1, 3)


def test_rational_rejects_floats_and_junk():
    with pytest.raises(TypeError):
        rational(0.25)
    with pytest.raises(ValueError):
        rational("abc")


def test_order_is_componentwise():
    u, v = Grade.of(0, 0), Grade.of(2, 1)
    assert u.leq(v) and u.lt(v)
    assert not v.leq(u)
    # incomparable pair
    a, b = Grade.of(0, 1), Grade.of(1, 0)
    assert not a.leq(b) and not b.leq(a)


def test_lt_requires_strict_on_every_axis():
    assert not Grade.of(0, 0).lt(Grade.of(0, 1))
    assert Grade.of(0, 0).leq(Grade.of(0, 1))


def test_arithmetic_and_shift():
    u = Grade.of(1, 2)
    e = diagonal(2, Fraction(1, 4))
    assert (u + e).coords == (Fraction(5, 4), Fraction(9, 4))
    assert (u - e).coords == (Fraction(3, 4), Fraction(7, 4))
    assert u.shift(Fraction(1, 2)).coords == (Fraction(3, 2), Fraction(5, 2))
    assert e.scale(2).coords == (Fraction(1, 2), Fraction(1, 2))


def test_sup_diff_and_min_span():
    u, v = Grade.of(0, 0), Grade.of(2, 1)
    assert u.sup_diff(v) == 2
    assert u.min_span(v) == 1


def test_cwise_max():
    assert Grade.of(0, 3).cwise_max(Grade.of(2, 1)).coords == (2, 3)


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        Grade.of(0, 0).leq(Grade.of(0, 0, 0))


def test_parse_grade_round_trip():
    g = parse_grade(["1/2", "-3", "0.25"])
    assert g.coords == (Fraction(1, 2), Fraction(-3), Fraction(1, 4))
    assert g.as_strings() == ["1/2", "-3", "1/4"]
