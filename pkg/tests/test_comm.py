from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from cubicy.comm import (
    BinForm, NORMAL_FORMS, apply_gl2_form, bar, binform_roots, classify_quartic, equivalent_glambda,
    gcd, glambda, glambda_orbit, normalize_quartic, quartic_invariants, recover_lambda, tilde,
)
from cubicy.errors import ExtensionUnavailable, PreconditionViolated
from cubicy.ncpoly import GL2, W1, W2, apply_gl2
from helpers import binforms, factored_quartics, gl2s, ncpolys


def f(*coeffs):
    return BinForm(len(coeffs) - 1, list(coeffs))


def test_bar_of_row_one_vanishes():
    assert bar(W1 - 2 * W2).is_zero()
    assert bar(W1) == f(0, 0, 4, 0, 0)


@pytest.mark.parametrize("form,tag", [
    (f(0, 0, 0, 0, 0), "Zero"),
    (f(1, 0, 0, 0, 0), "Quadruple"),
    (f(0, 1, 0, 0, 0), "TriplePlusOne"),
    (f(0, 0, 1, 0, 0), "DoubleDouble"),
    (f(1, 0, 1, 0, 0), "DoublePlusTwo"),
    (f(1, 0, 1, 0, 1), "FourDistinct"),
    (f(1, 0, -2, 0, 1), "DoubleDouble"),  # (x^2 - y^2)^2
    (f(0, 1, 0, 1, 0), "FourDistinct"),  # xy(x^2 + y^2)
])
def test_root_patterns(form, tag):
    assert classify_quartic(form).tag == tag


def test_orbit_of_one():
    assert glambda_orbit(1) == {Fraction(v) for v in (1, -1, Fraction(10, 3), Fraction(-10, 3), 14, -14)}
    assert glambda_orbit(0) == {0, 6, -6}


def test_lambda_two_is_rejected():
    with pytest.raises(PreconditionViolated):
        equivalent_glambda(2, 1)


def test_recovered_lambda_is_in_the_orbit():
    lam = recover_lambda(apply_gl2_form(GL2(1, 2, 1, -1), glambda(3)))
    assert equivalent_glambda(lam, 3)


def test_gcd_and_roots():
    g = gcd(f(1, 0, -1), f(1, 1, 0))  # (x-y)(x+y) and x(x+y)
    assert g.proportional(f(1, 1))
    _, pts, _ = binform_roots(f(0, 1, 0))  # xy
    assert {p for p, _ in pts} == {(0, 1), (1, 0)}


def test_unreachable_normal_form():
    with pytest.raises(ExtensionUnavailable):
        normalize_quartic(f(1, 0, 0, 1, 1))


@pytest.mark.parametrize("tag", list(NORMAL_FORMS))
def test_normal_forms_are_fixed(tag):
    form = NORMAL_FORMS[tag] if tag != "FourDistinct" else glambda(3)
    nq = normalize_quartic(form)
    assert apply_gl2_form(nq.sigma, form) == nq.form * nq.scale


@settings(max_examples=60, deadline=None)
@given(factored_quartics(), gl2s())
def test_normalization_transform_is_exact(form, s):
    g = apply_gl2_form(s, form)
    try:
        nq = normalize_quartic(g)
    except ExtensionUnavailable:
        assume(False)
    assert nq.tag == classify_quartic(form).tag
    assert apply_gl2_form(nq.sigma, g) == nq.form * nq.scale


@settings(max_examples=60, deadline=None)
@given(binforms(), gl2s())
def test_root_pattern_is_invariant(form, s):
    assert classify_quartic(apply_gl2_form(s, form)).tag == classify_quartic(form).tag


@settings(max_examples=60, deadline=None)
@given(ncpolys(), gl2s())
def test_bar_is_equivariant(w, s):
    assert bar(apply_gl2(s, w)) == apply_gl2_form(s, bar(w))


@settings(max_examples=60, deadline=None)
@given(binforms(3))
def test_cubic_tilde_inverts_bar(form):
    assert bar(tilde(form)) == form
