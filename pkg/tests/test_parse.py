from fractions import Fraction

import pytest
from hypothesis import given, settings

from cubicy.errors import NonHomogeneous, ParseError
from cubicy.ncpoly import GL2, NcPoly, W1, all_words, format_ncpoly, sp_coords
from cubicy.parse import parse_expression, parse_matrix, parse_point, parse_potential, parse_scalar
from cubicy.scalars import QQ, adjoin_sqrt, format_scalar
from helpers import EXCEPTIONAL, ROW_63_ADMISSIBLE, TABLE, ncpolys

GOLDEN = (
    [v[0] for v in TABLE.values()]
    + [ROW_63_ADMISSIBLE[0]]
    + [t for ts in EXCEPTIONAL.values() for t in ts]
    + [rel for v in TABLE.values() for rel in v[1]]
    + [
        "w0", "w3 - w4", "1/2*w1 + 3/7*w6",
        "w1 + w2 + sqrt(-3)*(w5 + w6)",
        "sqrt(2)*x^4 + sqrt(3)*y^4 + sqrt(6)*x*y*x*y",
        "(1/2 + sqrt(-3)/2)*x^2*y^2 - y^4",
        "sqrt(1 + sqrt(2))*w5",
        "x*(x + y)*(x - y)*y",
        "-(x*y - y*x)^2",
    ]
)


@pytest.mark.parametrize("text", GOLDEN)
def test_round_trip(text):
    w, _ = parse_expression(text)
    again, _ = parse_expression(format_ncpoly(w))
    assert again == w


@settings(max_examples=100, deadline=None)
@given(ncpolys())
def test_round_trip_random(w):
    assert parse_potential(format_ncpoly(w)) == w


def test_named_combination():
    assert sp_coords(parse_potential("w1 - 2*w2")) == (1, -2, 0, 0, 0, 0)


def test_expanded_basis_element():
    assert parse_potential("x*y^2*x + x^2*y^2 + y^2*x^2 + y*x^2*y") == W1


def test_implicit_and_explicit_products_agree():
    assert parse_potential("xyyx") == parse_potential("x*y*y*x") == parse_potential("x y^2 x")
    assert parse_potential("(x + y)^4") == NcPoly(4, {w: 1 for w in all_words(4)})


def test_scalars():
    assert parse_scalar("1/2 + 1/3") == Fraction(5, 6)
    r = parse_scalar("sqrt(-3)")
    assert r * r == -3
    assert parse_scalar("sqrt(4)") == 2
    _, s = adjoin_sqrt(QQ, -3)
    assert parse_scalar(format_scalar(Fraction(1, 2) + s / 2)) == Fraction(1, 2) + s / 2


def test_shared_tower_within_one_input():
    w, tower = parse_expression("sqrt(2)*w5 + sqrt(3)*w6")
    assert tower.depth == 2
    assert w.coeff("xxxx") * w.coeff("yyyy") == parse_scalar("sqrt(6)", tower)


@pytest.mark.parametrize("text,pos", [
    ("w1 + $", 5),
    ("w1 +", 4),
    ("x^y", 2),
    ("w9", 0),
    ("(w1", 3),
    ("w1 )", 3),
    ("x/y", 2),
    ("x/0", 2),
    ("   ?", 3),
])
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


def test_non_homogeneous():
    with pytest.raises(NonHomogeneous):
        parse_potential("x + y^2")
    with pytest.raises(NonHomogeneous):
        parse_potential("x + y")
    with pytest.raises(NonHomogeneous):
        parse_potential("x^3")


def test_matrix_and_point():
    assert parse_matrix("[[2, 0], [0, 3]]") == GL2(2, 0, 0, 3)
    m = parse_matrix("[[1, sqrt(-1)], [0, 1]]")
    assert m.b * m.b == -1
    assert parse_point("(1:0),(0:1)") == ((1, 0), (0, 1))
    with pytest.raises(ParseError):
        parse_matrix("[[1, 2], [2, 4]]")
    with pytest.raises(ParseError):
        parse_matrix("[[1, x], [0, 1]]")
    with pytest.raises(ParseError):
        parse_point("(1:0:1),(0:1)")
