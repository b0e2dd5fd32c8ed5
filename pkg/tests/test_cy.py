from fractions import Fraction

import pytest

from cubicy.comm import binform_roots
from cubicy.cy import (
    WHOLE_SURFACE, cy_check, hessian, is_standard, point_scheme, relations, segre_matrix,
    tau_of_point,
)
from cubicy.errors import NotOnE, PreconditionViolated
from cubicy.ncpoly import W1, W2, W5, project_c
from cubicy.parse import parse_potential
from helpers import CY_ROWS, EXCEPTIONAL, biform_from_text, row_data, row_potential


def trilinear(rel, p1, p2, p3):
    """Evaluate a cubic relation at a triple of points, word by word."""
    pts = (p1, p2, p3)
    total = Fraction(0)
    for word, c in rel.items():
        term = c
        for k, ch in enumerate(word):
            term = term * pts[k][0 if ch == "x" else 1]
        total = total + term
    return total


@pytest.mark.parametrize("row", CY_ROWS)
def test_table_rows_are_calabi_yau(row):
    assert cy_check(row_potential(row)).is_cy


@pytest.mark.parametrize("eid,text", [(e, t) for e, ts in EXCEPTIONAL.items() for t in ts])
def test_boundary_potentials_fail(eid, text):
    w = parse_potential(text)
    verdict = cy_check(w)
    assert not verdict.is_cy
    if verdict.witness is not None:
        p, q = verdict.witness
        forms = [f for row in segre_matrix(project_c(w)) for f in row]
        assert all(f(p, q) == 0 for f in forms)


def test_standardness():
    ok, q = is_standard(W1)
    assert ok and q == ((1, 0), (0, 1))
    assert is_standard(W5) == (False, None)


@pytest.mark.parametrize("row", CY_ROWS)
def test_hessian_matches_table(row):
    h = hessian(project_c(row_potential(row)))
    expected = biform_from_text(row_data(row)[2])
    if expected.is_zero():
        assert h.is_zero()
    else:
        assert h.proportional(expected)


def test_point_scheme_of_whole_surface_row():
    assert point_scheme(W1) is WHOLE_SURFACE


def test_point_scheme_requires_calabi_yau():
    with pytest.raises(PreconditionViolated):
        point_scheme(W5)


def test_tau_off_the_curve():
    with pytest.raises(NotOnE):
        tau_of_point(W1 - 2 * W2, ((1, 2), (1, -2)))


def test_tau_examples():
    assert tau_of_point(W1 - 2 * W2 - 2 * W5, ((1, 0), (1, 1))) == ((1, 1), (1, 2))
    assert tau_of_point(W1, ((1, 0), (0, 1))) == ((0, 1), (1, 0))


def _sample_points(h, count=3):
    out = []
    for t in range(-3, 4):
        p1 = (Fraction(1), Fraction(t))
        g = h.in_first(p1)
        if g.is_zero():
            out.append((p1, (Fraction(1), Fraction(5))))
            continue
        _, pts, _ = binform_roots(g)
        out.extend((p1, q) for q, _ in pts)
    return out[:count]


@pytest.mark.parametrize("row", [r for r in CY_ROWS if r not in ("4.1",)])
def test_tau_solves_the_relations(row):
    w = project_c(row_potential(row))
    rels = relations(w)
    for p1, p2 in _sample_points(hessian(w)):
        q2, p3 = tau_of_point(w, (p1, p2))
        assert all(trilinear(r, p1, p2, p3) == 0 for r in rels)
        assert q2[0] * p2[1] == q2[1] * p2[0]
