"""Alternative presentations: central extensions of the polynomial ring in
x, y, z (z of degree 2), and the Clifford form of symmetric potentials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import classify, proportional, same_span, _tower
from .comm import BinForm, bar, format_terms, tilde
from .cy import cy_check, relations
from .errors import ExtensionUnavailable, PreconditionViolated, SymmetricPotential
from .ncpoly import (
    GL2, W1, W2, W5, W6, NcPoly, _word_text, all_words, apply_gl2, in_sym4, mu, project_c, sp_coords,
)
from .oracle import IdealSlices
from .scalars import Scalar, adjoin_sqrt


@dataclass
class DqPresentation:
    """Relations [y,z] = lam f_x, [z,x] = lam f_y, [x,y] = lam f_z with tildes.

    f = F(x, y) + k z^2 + z q(x, y).
    """

    lam: Scalar
    F: BinForm
    k: Scalar
    q: BinForm

    def f_text(self) -> str:
        terms = [(c, t) for c, t in _form_terms(self.F)]
        terms += [(c, f"z*{t}" if t else "z") for c, t in _form_terms(self.q)]
        terms.append((self.k, "z^2"))
        return format_terms(terms)

    def relation_texts(self) -> list[str]:
        out = []
        for name, lhs, deriv in (("x", {"yz": 1, "zy": -1}, self.F.dx()),
                                 ("y", {"zx": 1, "xz": -1}, self.F.dy())):
            terms = dict(lhs)
            for word, c in tilde(deriv).items():
                terms[word] = terms.get(word, 0) - self.lam * c
            ql = self.q.dx() if name == "x" else self.q.dy()
            for word, c in tilde(ql).items():
                for w in ("z" + word, word + "z"):
                    terms[w] = terms.get(w, 0) - self.lam * c / 2
            out.append(_words_text(terms))
        terms = {"xy": 1, "yx": -1, "z": -2 * self.lam * self.k}
        if not self.q.is_zero():
            for word, c in tilde(self.q).items():
                terms[word] = terms.get(word, 0) - self.lam * c
        out.append(_words_text(terms))
        return out


def _form_terms(f: BinForm):
    from .comm import _mono_text

    return [(c, _mono_text(("x", "y"), f.degree - i, i)) for i, c in enumerate(f.coeffs)]


def _words_text(terms: dict) -> str:
    return format_terms([(c, _word_text(w)) for w, c in terms.items()])


def to_dq(w: NcPoly) -> DqPresentation:
    c = project_c(w)
    m = mu(c)
    if m == 0:
        raise SymmetricPotential("potentials in Sym^4 V have no such presentation")
    lam = -3 / (8 * m)
    # the z^2 coefficient is fixed by requiring [x, y] - lam f_z = xy - yx - z
    return DqPresentation(lam, bar(c), -4 * m / 3, BinForm(2))


def eliminated_relations(dq: DqPresentation) -> Optional[list[NcPoly]]:
    """The two cubic relations after solving the z relation for z."""
    if dq.lam == 0 or dq.k == 0:
        return None
    zq = tilde(dq.q) if not dq.q.is_zero() else NcPoly.zero(2)
    z = (NcPoly(2, {"xy": 1, "yx": -1}) - zq * dq.lam) / (2 * dq.lam * dq.k)
    x, y = NcPoly.word("x"), NcPoly.word("y")
    out = []
    for comm, fd, qd in ((y * z - z * y, dq.F.dx(), dq.q.dx()),
                         (z * x - x * z, dq.F.dy(), dq.q.dy())):
        rel = comm - tilde(fd) * dq.lam
        if not qd.is_zero():
            ell = tilde(qd)
            rel = rel - (z * ell + ell * z) * (dq.lam / 2)
        out.append(rel)
    return out


def verify_dq(w: NcPoly, dq: Optional[DqPresentation] = None) -> bool:
    """Check that the presentation has the same cubic relations as J(w)."""
    c = project_c(w)
    dq = dq or to_dq(c)
    rels = eliminated_relations(dq)
    return rels is not None and same_span(rels, relations(c))


# -- Clifford form -------------------------------------------------------------------

@dataclass
class CliffordPresentation:
    a: Scalar
    b: Scalar
    sigma: GL2
    potential: NcPoly

    @property
    def matrices(self):
        return ((3, -self.a), (0, 0)), ((0, 0), (-self.b, 3))

    def relation_texts(self) -> list[str]:
        return [str(r) for r in relations(self.potential)]


def _require_symmetric_cy(c: NcPoly):
    if not in_sym4(c):
        raise PreconditionViolated("expected a potential in Sym^4 V")
    if not cy_check(c).is_cy:
        raise PreconditionViolated("expected a Calabi-Yau potential")


def to_clifford(w: NcPoly) -> CliffordPresentation:
    """sigma and (a, b) with sigma(c(w)) proportional to w1 + w2 + a w5 + b w6."""
    c = project_c(w)
    _require_symmetric_cy(c)
    rep = classify(c)
    if rep.normalizing_sigma is None:
        raise ExtensionUnavailable("normal form unavailable: " + "; ".join(rep.notes))
    sigma, wn = rep.normalizing_sigma, rep.normalized_potential
    tag = rep.quartic_class.tag
    if tag == "DoublePlusTwo":
        alpha = sp_coords(wn)[0]
        _, t = adjoin_sqrt(_tower(wn, sigma), alpha)
        sigma = GL2(t, 0, 0, 1) @ sigma
    elif tag not in ("DoubleDouble", "FourDistinct"):
        raise AssertionError(f"symmetric Calabi-Yau potential with root pattern {tag}")
    image = apply_gl2(sigma, c)
    co = sp_coords(image)
    a, b = co[4] / co[0], co[5] / co[0]
    target = W1 + W2 + W5 * a + W6 * b
    if proportional(image, target) is None:
        raise AssertionError("Clifford normalization failed the substitution check")
    return CliffordPresentation(a, b, sigma, target)


def verify_centrality(w: NcPoly, n_max: int = 6) -> bool:
    """x^3 and y^3 commute with every word of degree <= n_max - 3 in the
    normalized Clifford coordinates."""
    cp = to_clifford(w)
    ideal = IdealSlices(relations(cp.potential))
    for cube in (NcPoly.word("xxx"), NcPoly.word("yyy")):
        for n in range(1, n_max - 2):
            for u in all_words(n):
                uw = NcPoly.word(u)
                if not ideal.contains(cube * uw - uw * cube):
                    return False
    return True
