from fractions import Fraction

from hypothesis import given, settings

from cubicy.ncpoly import (
    BASIS, GL2, NcPoly, W0, W1, W2, W3, W5, apply_gl2, dleft, dright, in_sym4, is_superpotential,
    mu, project_a, project_c, project_s, sp_coords, from_sp_coords,
)
from helpers import gl2s, ncpolys, superpotentials


def test_cyclic_average_of_a_word():
    assert project_c(NcPoly.word("xxxy")) * 4 == W3


def test_mu_on_basis_combinations():
    assert mu(W2) == Fraction(1, 2)
    assert mu(W1) == Fraction(-1, 2)
    assert mu(W0) == 1
    assert mu(W2 - W1) == 1
    assert mu(W1 - 2 * W2) == Fraction(-3, 2)


def test_sp_coords():
    assert sp_coords(W1 - 2 * W2) == (1, -2, 0, 0, 0, 0)
    assert sp_coords(NcPoly.word("xxxy")) is None
    assert from_sp_coords((0, 0, 1, 0, 0, 0)) == W3


def test_right_derivative():
    assert dright(W2, "x") == NcPoly.word("yxy")


def test_derivatives_agree_on_superpotentials():
    for w in BASIS:
        for t in "xy":
            assert dleft(w, t) == dright(w, t)


def test_basis_elements_are_superpotentials():
    assert all(is_superpotential(w) for w in BASIS)
    assert not is_superpotential(NcPoly.word("xxyy"))


def test_gl2_substitution():
    sigma = GL2(1, 1, -1, 1)
    assert apply_gl2(sigma, NcPoly.word("x")) == NcPoly(1, {"x": 1, "y": -1})
    assert apply_gl2(sigma, NcPoly.word("y")) == NcPoly(1, {"x": 1, "y": 1})


@settings(max_examples=40, deadline=None)
@given(gl2s(), gl2s(), ncpolys(3))
def test_action_composes(s, t, w):
    assert apply_gl2(s @ t, w) == apply_gl2(s, apply_gl2(t, w))


@settings(max_examples=40, deadline=None)
@given(superpotentials())
def test_sym4_iff_mu_zero(w):
    assert in_sym4(w) == (mu(w) == 0)


@settings(max_examples=40, deadline=None)
@given(superpotentials(), gl2s())
def test_mu_scales_by_det_squared(w, s):
    assert mu(apply_gl2(s, w)) == s.det ** 2 * mu(w)


@settings(max_examples=40, deadline=None)
@given(ncpolys())
def test_projectors_land_in_their_images(w):
    assert is_superpotential(project_c(w))
    assert in_sym4(project_s(w))
    assert project_s(project_a(w)).is_zero()
