from fractions import Fraction

import pytest

from cubicy.errors import PreconditionViolated, SymmetricPotential
from cubicy.ncpoly import W1, W2, W5, W6
from cubicy.present import DqPresentation, to_clifford, to_dq, verify_centrality, verify_dq
from helpers import CY_ROWS, row_potential

NON_SYMMETRIC = [r for r in CY_ROWS if r not in ("4.3", "5.3")]


def test_dq_examples():
    dq = to_dq(W1 - 2 * W2)
    assert dq.lam == Fraction(1, 4) and dq.F.is_zero() and dq.k == 2
    dq = to_dq(W1)
    assert dq.lam == Fraction(3, 4) and dq.k == Fraction(2, 3)
    assert dq.f_text() == "4*x^2*y^2 + 2/3*z^2"


@pytest.mark.parametrize("row", NON_SYMMETRIC)
def test_dq_presentation_matches(row):
    assert verify_dq(row_potential(row))


@pytest.mark.parametrize("row", [r for r in NON_SYMMETRIC if r != "1"])
def test_perturbed_lambda_fails(row):
    w = row_potential(row)
    dq = to_dq(w)
    bad = DqPresentation(dq.lam * 2, dq.F, dq.k / 2, dq.q)
    assert not verify_dq(w, bad)


def test_symmetric_potentials_have_no_dq_form():
    with pytest.raises(SymmetricPotential):
        to_dq(W1 + W2)


FAMILIES = {
    "diagonal": [W1 + W2, 2 * W1 + 2 * W2, -W1 - W2, Fraction(1, 3) * (W1 + W2), 5 * (W1 + W2)],
    "one-sided": [W1 + W2 + a * W5 for a in (1, 2, -1, Fraction(1, 2), 6)],
    "balanced": [W1 + W2 + a * (W5 + W6) for a in (2, -2, Fraction(1, 2), 5, -7)],
}


@pytest.mark.parametrize("family", list(FAMILIES))
def test_cubes_are_central(family):
    for w in FAMILIES[family]:
        cp = to_clifford(w)
        if family == "diagonal":
            assert cp.a == 0 and cp.b == 0
        elif family == "one-sided":
            assert cp.a == 1 and cp.b == 0
        else:
            assert cp.a == cp.b != 0
        assert verify_centrality(w, 6)


def test_clifford_needs_symmetric_input():
    with pytest.raises(PreconditionViolated):
        to_clifford(W1)
