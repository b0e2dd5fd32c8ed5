"""Automorphisms that extend to the algebra, and their homological determinant."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import classify, proportional, _tower
from .comm import bar, classify_quartic, quartic_invariants
from .cy import cy_check
from .errors import PreconditionViolated
from .ncpoly import GL2, NcPoly, apply_gl2, in_sym4, is_superpotential, mu, permute, project_c
from .scalars import Scalar, adjoin_sqrt


@dataclass
class AutCheck:
    extends: bool
    eigenvalue: Optional[Scalar]
    det: Scalar
    hdet: Optional[Scalar]

    @property
    def equals_detsq(self) -> Optional[bool]:
        return None if self.hdet is None else self.hdet == self.det ** 2


def eigenvalue(w: NcPoly, sigma: GL2) -> Optional[Scalar]:
    """lambda with sigma(w) == lambda w, or None."""
    if w.is_zero():
        raise PreconditionViolated("the zero potential has no eigenvalue")
    return proportional(apply_gl2(sigma, w), w)


def _require_cy(w: NcPoly):
    if not is_superpotential(w):
        raise PreconditionViolated("expected a superpotential")
    if not cy_check(w).is_cy:
        raise PreconditionViolated("expected a Calabi-Yau potential")


def check_automorphism(w: NcPoly, sigma: GL2, require_cy: bool = True) -> AutCheck:
    """Does sigma extend to J(w), and what is its homological determinant.

    sigma extends exactly when it rescales w; the homological determinant is
    then that scalar.
    """
    if require_cy:
        _require_cy(w)
    lam = eigenvalue(w, sigma)
    return AutCheck(lam is not None, lam, sigma.det, lam)


def hdet_equals_detsq(w: NcPoly, sigma: GL2) -> bool:
    chk = check_automorphism(w, sigma)
    if not chk.extends:
        raise PreconditionViolated("the transform does not extend to the algebra")
    return chk.equals_detsq


def _g_family(tower):
    """The 24 transforms permuting the roots of x^4 + y^4 + lam x^2 y^2."""
    _, i = adjoin_sqrt(tower, -1)
    units = (1, -1, i, -i)
    for z in units:
        yield GL2(1, 0, 0, z)
        yield GL2(0, 1, z, 0)
    for b in units:
        for xi in units:
            yield GL2(1, -xi, b, xi * b)


def is_hdet_exceptional(w: NcPoly):
    """(flag, witness): does some extending sigma have hdet != det^2.

    Within Calabi-Yau potentials this happens exactly for the symmetric ones
    whose abelianization has four distinct roots and vanishing I invariant.
    The witness is a transform found by search after normalizing.
    """
    _require_cy(w)
    c = project_c(w)
    if mu(c) != 0:
        return False, None
    f = bar(c)
    if classify_quartic(f).tag != "FourDistinct" or quartic_invariants(f)[0] != 0:
        return False, None
    rep = classify(c)
    if rep.normalizing_sigma is None:
        return True, None
    s = rep.normalizing_sigma
    wn = rep.normalized_potential
    for tau in _g_family(_tower(wn, s)):
        lam = eigenvalue(wn, tau)
        if lam is not None and lam != tau.det ** 2:
            sigma = s.inverse() @ tau @ s
            return True, sigma
    raise AssertionError("no witness found for an exceptional potential")


def is_alt_power(w: NcPoly) -> bool:
    """True when w lies in (Alt^2 V)^{tensor m}, m = degree / 2."""
    if w.degree % 2:
        return False
    n = w.degree
    for k in range(0, n, 2):
        theta = list(range(1, n + 1))
        theta[k], theta[k + 1] = theta[k + 1], theta[k]
        if permute(theta, w) != -w:
            return False
    return True


def detsq_power_check(sigma: GL2, w: NcPoly) -> bool:
    """sigma(w) == det(sigma)^m w for w in the m-th tensor power of Alt^2 V."""
    if not is_alt_power(w):
        raise PreconditionViolated("input is not in a tensor power of Alt^2 V")
    m = w.degree // 2
    return apply_gl2(sigma, w) == w * sigma.det ** m


def symmetric_potential(a) -> NcPoly:
    """The symmetric potential whose abelianization is 6x^2y^2 + a(x^4 + y^4)."""
    from .ncpoly import W1, W2, W5, W6

    return W1 + W2 + (W5 + W6) * a


__all__ = [
    "AutCheck", "eigenvalue", "check_automorphism", "hdet_equals_detsq",
    "is_hdet_exceptional", "is_alt_power", "detsq_power_check", "symmetric_potential",
    "in_sym4",
]
