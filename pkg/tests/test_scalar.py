from fractions import Fraction

import pytest
from hypothesis import given

from pgeo.errors import DivisionByZero
from pgeo.scalar import (
    format_scalar,
    neg_part,
    normalize,
    parse_scalar,
    pos_part,
    rational_sqrt,
    sign,
)

from strategies import rationals


@pytest.mark.parametrize("n,d,expected", [(2, 4, Fraction(1, 2)), (3, -6, Fraction(-1, 2)), (0, 5, Fraction(0))])
def test_normalize(n, d, expected):
    r = normalize(n, d)
    assert r == expected
    assert r.denominator > 0


def test_normalize_zero_denominator():
    with pytest.raises(DivisionByZero):
        normalize(1, 0)
    # also usable as the builtin exception
    with pytest.raises(ZeroDivisionError):
        normalize(1, 0)


@pytest.mark.parametrize("x,s", [(Fraction(1, 2), 1), (Fraction(0), 0), (Fraction(-7, 3), -1)])
def test_sign(x, s):
    assert sign(x) == s


def test_parts():
    assert pos_part(Fraction(3, 2)) == Fraction(3, 2)
    assert neg_part(Fraction(3, 2)) == 0
    assert pos_part(Fraction(-1, 4)) == 0
    assert neg_part(Fraction(-1, 4)) == Fraction(1, 4)


@given(rationals)
def test_parts_decompose(x):
    assert pos_part(x) - neg_part(x) == x
    assert pos_part(x) >= 0 and neg_part(x) >= 0
    assert pos_part(x) * neg_part(x) == 0


@given(rationals)
def test_text_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_text_forms():
    assert format_scalar(Fraction(4, 2)) == "2"
    assert format_scalar(Fraction(-3, 6)) == "-1/2"
    assert parse_scalar("+3/9") == Fraction(1, 3)
    for bad in ("1 /2", "1.5", "", "/3", "1/-2"):
        with pytest.raises(ValueError):
            parse_scalar(bad)
    with pytest.raises(ZeroDivisionError):
        parse_scalar("1/0")


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None
    assert rational_sqrt(0) == 0
