from fractions import Fraction

import pytest

from conflab.core.exceptions import PolynomialSyntaxError, UndeclaredVariableError
from conflab.core.polyring import D, L, MultiPoly, parse


def test_grammar():
    assert parse("d + 2*l") == D + L.scale(2)
    assert parse("(d + l)^2") == D * D + D * L.scale(2) + L * L
    assert parse("-d - 2*l") == -D - L.scale(2)
    assert parse("3/4") == MultiPoly.const(Fraction(3, 4))
    assert parse("  d*  l ") == D * L
    assert parse("+d") == D


def test_declared_parameters():
    assert parse("a*d + b", params=["a", "b"]).variables() == {"a", "b", "d"}
    with pytest.raises(UndeclaredVariableError) as info:
        parse("a*d + c", params=["a"])
    assert info.value.name == "c"
    assert info.value.offset == 6


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("d +", 3),
        ("d ** 2", 3),
        ("(d + l", 6),
        ("1/0", 2),
        ("d^l", 2),
    ],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse(text)
    assert info.value.offset == offset


def test_offsets_count_bytes():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse("d + λ")
    assert info.value.offset == 4
    with pytest.raises(PolynomialSyntaxError) as info:
        parse("λ + ?")
    assert info.value.offset == 0


def test_exponent_is_bounded():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse("d^99999999")
    assert info.value.offset == 2


def test_exponent_bound_follows_degree_bound(monkeypatch):
    monkeypatch.setenv("CONFLAB_DEGREE_BOUND", "1")
    assert parse("l^8") == L**8
    with pytest.raises(PolynomialSyntaxError) as info:
        parse("1 + l^9")
    assert info.value.offset == 6
