"""Algebraic identities checked on random inputs; runs on its own with
``pytest tests/test_properties.py``."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicy.comm import apply_gl2_form, bar, quartic_invariants, tilde
from cubicy.cy import cy_check, is_standard, matrix_of, reconstruct_from_matrix, relations, segre_matrix
from cubicy.ncpoly import (
    GL2, apply_gl2, cyclic_shift, dleft, from_sp_coords, permute, project_a, project_c, project_s,
    reconstruct_identity_check,
)
from cubicy.oracle import graded_dims
from cubicy.parse import parse_potential
from helpers import CY_ROWS, EXCEPTIONAL, binforms, gl2s, groebner_empty, ncpolys, row_potential, superpotentials

PROJECTORS = {"c": project_c, "s": project_s, "a": project_a}
SIGNATURE_5 = [1, 2, 4, 6, 9, 12]

perms4 = st.permutations([1, 2, 3, 4])


@pytest.mark.parametrize("name", list(PROJECTORS))
@settings(max_examples=200, deadline=None)
@given(w=ncpolys(), sigma=gl2s(), theta=perms4)
def test_projector_idempotent_and_equivariant(name, w, sigma, theta):
    p = PROJECTORS[name]
    pw = p(w)
    assert p(pw) == pw
    assert p(apply_gl2(sigma, w)) == apply_gl2(sigma, pw)
    # images: cyclic invariants for c, full S_4 invariants for s
    if name == "c":
        assert cyclic_shift(pw) == pw
    elif name == "s":
        assert permute(theta, pw) == pw


@settings(max_examples=200, deadline=None)
@given(ncpolys(), perms4, gl2s())
def test_permutations_commute_with_substitution(w, theta, sigma):
    assert permute(theta, apply_gl2(sigma, w)) == apply_gl2(sigma, permute(theta, w))


@settings(max_examples=100, deadline=None)
@given(binforms(4), ncpolys())
def test_bar_and_tilde_are_inverse(f, w):
    assert bar(tilde(f)) == f
    s = project_s(w)
    assert tilde(bar(s)) == s


@settings(max_examples=100, deadline=None)
@given(binforms(4), gl2s())
def test_bar_commutes_with_substitution(f, sigma):
    w = tilde(f)
    assert bar(apply_gl2(sigma, w)) == apply_gl2_form(sigma, f)


@pytest.mark.parametrize("degree", [2, 3, 4, 5])
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_tilde_of_a_derivative(degree, data):
    f = data.draw(binforms(degree))
    for letter, df in (("x", f.dx()), ("y", f.dy())):
        assert tilde(df) == dleft(tilde(f), letter) * degree


@settings(max_examples=100, deadline=None)
@given(ncpolys(), superpotentials())
def test_reconstruction(w, sp):
    assert reconstruct_identity_check(w)
    assert reconstruct_from_matrix(matrix_of(sp)) == sp


@pytest.mark.parametrize("row", CY_ROWS)
def test_cy_check_is_invariant(row):
    rng = random.Random(f"cy-{row}")
    w = row_potential(row)
    assert cy_check(w).is_cy
    for _ in range(50):
        sigma = _random_rational_gl2(rng)
        assert cy_check(apply_gl2(sigma, w)).is_cy


@pytest.mark.parametrize("text", [t for ts in EXCEPTIONAL.values() for t in ts])
def test_non_cy_is_invariant(text):
    rng = random.Random(text)
    w = parse_potential(text)
    for _ in range(10):
        assert not cy_check(apply_gl2(_random_rational_gl2(rng), w)).is_cy


def _random_rational_gl2(rng):
    while True:
        m = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
        if m[0] * m[3] != m[1] * m[2]:
            return GL2(*m)


@settings(max_examples=100, deadline=None)
@given(binforms(4), gl2s())
def test_quartic_invariants_are_covariant(f, sigma):
    i0, j0, d0 = quartic_invariants(f)
    i1, j1, d1 = quartic_invariants(apply_gl2_form(sigma, f))
    det = sigma.det
    assert i1 == det ** 4 * i0
    assert j1 == det ** 6 * j0
    assert d1 == det ** 12 * d0


def test_emptiness_oracle_agrees():
    """cy_check against a Groebner emptiness test and against graded dimensions."""
    rng = random.Random(50)
    outcomes = set()
    for k in range(50):
        # mix generic points with ones on coordinate hyperplanes
        coords = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) if rng.random() < 0.7 else 0
                  for _ in range(6)]
        w = from_sp_coords(coords)
        verdict = cy_check(w)
        standard, _ = is_standard(w)
        if standard:
            forms = [f for row in segre_matrix(project_c(w)) for f in row]
            assert verdict.is_cy == groebner_empty(forms), coords
        else:
            assert not verdict.is_cy
        if not project_c(w).is_zero():
            dims = graded_dims(relations(w), 5)
            assert verdict.is_cy == (dims == SIGNATURE_5), coords
        outcomes.add(verdict.is_cy)
    assert outcomes == {True, False}
