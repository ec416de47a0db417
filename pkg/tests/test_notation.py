# tests/test_notation.py
from fractions import Fraction

import pytest

from core.error_handler import InvalidParabolicError, InvalidTypeError
from core.notation import (
    format_parabolic,
    format_rational,
    parse_parabolic,
    parse_range,
    parse_rational,
    parse_type,
)
from core.rootsystem import SimpleType


@pytest.mark.parametrize("text,expected", [
    ("E6", SimpleType("E", 6)),
    ("d 5", SimpleType("D", 5)),
    ("B_3", SimpleType("B", 3)),
])
def test_parse_type(text, expected):
    assert parse_type(text) == expected


def test_parse_type_with_rank():
    assert parse_type("c", 4) == SimpleType("C", 4)


@pytest.mark.parametrize("text", ["", "X3", "E", "E5", "EE6"])
def test_parse_type_rejects(text):
    with pytest.raises(InvalidTypeError):
        parse_type(text)


def test_parse_parabolic_is_zero_based():
    assert parse_parabolic("1,6", 6) == frozenset({0, 5})
    assert parse_parabolic("{1, l-1, l}", 6) == frozenset({0, 4, 5})
    assert parse_parabolic("{}", 4) == frozenset()
    assert format_parabolic({0, 5}) == "1,6"


@pytest.mark.parametrize("text", ["0", "7", "1,x", "l-6"])
def test_parse_parabolic_rejects(text):
    with pytest.raises(InvalidParabolicError):
        parse_parabolic(text, 6)


def test_out_of_range_message_names_the_index():
    with pytest.raises(InvalidParabolicError, match="index 7 at position 2"):
        parse_parabolic("1,7", 6)


def test_rationals():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-3") == -3
    assert parse_rational("0.25") == Fraction(1, 4)
    assert parse_rational(Fraction(2, 3)) == Fraction(2, 3)
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(3) == "3/1"
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("half")


def test_ranges():
    assert list(parse_range("4-6")) == [4, 5, 6]
    assert list(parse_range("5")) == [5]
    with pytest.raises(ValueError):
        parse_range("6-4")
