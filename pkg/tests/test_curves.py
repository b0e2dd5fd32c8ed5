import pytest

from cubicy.comm import BinForm
from cubicy.curves import (
    classify_curve, factor_22, form_sqrt, format_factorization, intersect_11, singular_points_22,
)
from cubicy.cy import BiForm, point_scheme
from cubicy.scalars import QQ
from helpers import CY_ROWS, biform_from_text, row_data, row_potential, tau_kind, tau_permutation


@pytest.mark.parametrize("row", CY_ROWS)
def test_curve_type_per_row(row):
    assert classify_curve(point_scheme(row_potential(row))).tag == row_data(row)[3]


@pytest.mark.parametrize("row", [r for r in CY_ROWS if r != "4.1"])
def test_factorization_multiplies_back(row):
    h = point_scheme(row_potential(row))
    assert factor_22(h).product() == h


def test_row_one_prints_as_a_square():
    h = point_scheme(row_potential("1"))
    assert format_factorization(factor_22(h)) == "(x1*y2 - y1*x2)^2"


@pytest.mark.parametrize("row,rank", [("3", 1), ("5.3", 2)])
def test_single_singular_point(row, rank):
    _, sing = singular_points_22(point_scheme(row_potential(row)))
    assert len(sing) == 1
    (p, q), r = sing[0].point, sing[0].rank
    assert p == (0, 1) and q == (0, 1) and r == rank


def test_smooth_curve_has_no_singular_points():
    _, sing = singular_points_22(point_scheme(row_potential("6.3*")))
    assert sing == []


def test_intersection_counts():
    a = biform_from_text("x1*y2 - y1*x2", (1, 1))
    b = biform_from_text("x1*y2 + y1*x2", (1, 1))
    c = biform_from_text("x1*y2 - y1*x2 + x1*x2", (1, 1))
    assert intersect_11(a, b, QQ).count == 2
    assert intersect_11(a, c, QQ).count == 1


def test_form_sqrt():
    f = BinForm(2, [1, 2, 1])
    tower, r = form_sqrt(f * f * 4, QQ)
    assert r * r == f * f * 4


@pytest.mark.parametrize("row", [r for r in CY_ROWS if row_data(r)[4]])
def test_tau_action_on_components(row):
    assert tau_kind(tau_permutation(row_potential(row))) == row_data(row)[4]
