"""From a degree-4 potential to its place in the classification.

The row is read off invariants that do not depend on a normal form: the root
pattern of the abelianized potential, the Calabi-Yau verdict, and the shape of
the point scheme.  A normalizing transform is computed alongside when its
roots are reachable, giving the row parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .comm import QuarticClass, bar, classify_quartic, normalize_quartic
from .curves import CurveClass, classify_curve
from .cy import CYVerdict, cy_check, point_scheme, relations
from .errors import ExtensionUnavailable, PreconditionViolated
from .linalg import rank
from .ncpoly import GL2, NcPoly, apply_gl2, project_c, sp_coords
from .scalars import adjoin_sqrt, tower_of

ROWS = ("1", "2", "3", "4.1", "4.2", "4.3", "5.1", "5.2", "5.3", "6.1", "6.2", "6.3")
CASE_OF_TAG = {
    "Zero": "1", "Quadruple": "2", "TriplePlusOne": "3",
    "DoubleDouble": "4", "DoublePlusTwo": "5", "FourDistinct": "6",
}
EXCEPTIONAL_OF_TAG = {
    "Quadruple": "E1", "TriplePlusOne": "E2", "DoubleDouble": "E3",
    "DoublePlusTwo": "E4", "FourDistinct": "E5",
}

_ROW_OF_CURVE = {
    ("Zero", "Double11"): "1",
    ("Quadruple", "Two11Meet1"): "2",
    ("TriplePlusOne", "IrreducibleCusp"): "3",
    ("DoubleDouble", "WholeSurface"): "4.1",
    ("DoubleDouble", "Double11"): "4.2",
    ("DoubleDouble", "Two11Meet2"): "4.3",
    ("DoublePlusTwo", "DoubleRulingPair"): "5.1",
    ("DoublePlusTwo", "Two11Meet1"): "5.2",
    ("DoublePlusTwo", "IrreducibleBiflecnode"): "5.3",
    ("FourDistinct", "FourRulings"): "6.1",
    ("FourDistinct", "Two11Meet2"): "6.2",
    ("FourDistinct", "Smooth22"): "6.3",
}


def _words(*pairs):
    return NcPoly(3, dict(pairs))


EXCEPTIONAL_RELATIONS = {
    "E1": (_words(("xxx", 1)),),
    "E2": (_words(("xxx", 1)), _words(("xxy", 1), ("xyx", 1), ("yxx", 1))),
    "E3": (_words(("yxy", 1)), _words(("xyx", 1))),
    "E4": (_words(("yxy", 1), ("xxx", 1)), _words(("xyx", 1))),
    "E5": (_words(("xxx", 1)), _words(("yyy", 1))),
}
EXCEPTIONAL_TEXT = {
    "E1": "k<x,y>/(x^3)",
    "E2": "k<x,y>/(x^3, x^2*y + x*y*x + y*x^2)",
    "E3": "k<x,y>/(y*x*y, x*y*x)",
    "E4": "k<x,y>/(y*x*y + x^3, x*y*x)",
    "E5": "k<x,y>/(x^3, y^3)",
}


def _tower(*objs):
    """Smallest tower holding the coefficients of the given polynomials and matrices."""
    vals = []
    for o in objs:
        if isinstance(o, GL2):
            vals.extend((o.a, o.b, o.c, o.d))
        elif o is not None:
            vals.extend(v for _, v in o.items())
    return tower_of(*vals)


def defining_relations(w: NcPoly):
    return relations(w)


def same_span(a, b) -> bool:
    va = [p.to_vector() for p in a if not p.is_zero()]
    vb = [p.to_vector() for p in b if not p.is_zero()]
    ra, rb = rank(va), rank(vb)
    return ra == rb and rank(va + vb) == ra


@dataclass
class ClassificationReport:
    cyclic_part: NcPoly
    sp_coords: Optional[tuple]
    quartic_class: Optional[QuarticClass] = None
    cy: Optional[CYVerdict] = None
    table_row: Optional[str] = None
    parameters: dict = field(default_factory=dict)
    exceptional_id: Optional[str] = None
    exceptional_sigma: Optional[GL2] = None
    point_scheme: object = None
    curve_class: Optional[CurveClass] = None
    normalizing_sigma: Optional[GL2] = None
    normalized_potential: Optional[NcPoly] = None
    notes: list = field(default_factory=list)

    @property
    def relations(self):
        return defining_relations(self.cyclic_part)


def _normalize(c: NcPoly, qc: QuarticClass, report: ClassificationReport):
    try:
        nq = normalize_quartic(bar(c))
    except ExtensionUnavailable as exc:
        report.notes.append(f"normal form unavailable: {exc}")
        return None
    wn = apply_gl2(nq.sigma, c) / nq.scale
    report.normalizing_sigma = nq.sigma
    report.normalized_potential = wn
    return wn


def _row_parameters(row: str, wn: NcPoly) -> dict:
    a1, b2, _, _, _, _ = sp_coords(wn)
    params = {"alpha": a1, "beta": b2}
    if row == "6.1" and a1 == 0:
        params["gamma"] = b2
    if row == "6.2" and b2 == 0:
        params["gamma"] = 1 / a1
    return params


def fold_case6(wn: NcPoly):
    """Re-express a folded case-6 potential through x -> x - y, y -> x + y.

    Returns (sigma, potential) with the image rescaled so its w5 coordinate is
    1, or None when the potential is not on a folded branch.
    """
    a, b, _, _, _, _ = sp_coords(wn)
    if a == 0 or b == 0:
        return None
    sigma = GL2.identity()
    w = wn
    if b == -1 or 2 * a - b == -1:
        _, i = adjoin_sqrt(_tower(wn), -1)
        flip = GL2(1, 0, 0, i)
        w = apply_gl2(flip, w)
        sigma = flip
        a, b = -a, -b
    if not (b == 1 or 2 * a - b == 1):
        return None
    shear = GL2(1, 1, -1, 1)
    w = apply_gl2(shear, w)
    sigma = shear @ sigma
    co = sp_coords(w)
    w = w / co[4]
    return sigma, w


def classify(w: NcPoly) -> ClassificationReport:
    c = project_c(w)
    report = ClassificationReport(c, sp_coords(c))
    if c.is_zero():
        report.notes.append("cyclic part is zero")
        return report
    qc = classify_quartic(bar(c))
    report.quartic_class = qc
    report.cy = cy_check(c)
    wn = _normalize(c, qc, report)
    if not report.cy.is_cy:
        eid = EXCEPTIONAL_OF_TAG[qc.tag]
        report.exceptional_id = eid
        try:
            report.exceptional_sigma = match_exceptional(c, eid)
        except ExtensionUnavailable as exc:
            report.notes.append(f"exceptional transform unavailable: {exc}")
        return report
    ps = point_scheme(c)
    report.point_scheme = ps
    try:
        report.curve_class = classify_curve(ps)
    except ExtensionUnavailable as exc:
        report.notes.append(f"curve type unavailable: {exc}")
        report.table_row = CASE_OF_TAG[qc.tag] + (".?" if qc.tag in ("DoubleDouble", "DoublePlusTwo", "FourDistinct") else "")
        return report
    row = _ROW_OF_CURVE.get((qc.tag, report.curve_class.tag))
    if row is None:
        raise AssertionError(f"no row for {qc.tag} with curve {report.curve_class.tag}")
    report.table_row = row
    if wn is not None and row in ("4.3", "5.3", "6.1", "6.2", "6.3"):
        report.parameters = _row_parameters(row, wn)
        if row in ("6.1", "6.2") and "gamma" not in report.parameters:
            folded = fold_case6(wn)
            if folded is not None:
                fa, fb, _, _, _, _ = sp_coords(folded[1])
                if row == "6.1" and fa == 0:
                    report.parameters["gamma"] = fb
                elif row == "6.2" and fb == 0:
                    report.parameters["gamma"] = 1 / fa
    return report


# -- exceptional algebras --------------------------------------------------------------

def cube_roots_in_span(rels, tower=None):
    """Linear forms l (as (u, v) with l = u x + v y) with l^3 in span(rels)."""
    from .oracle import nilpotent_directions

    return nilpotent_directions(rels, tower)


def _basis_from_images(l1, l2) -> GL2:
    """sigma^-1 where sigma(x) = l1, sigma(y) = l2."""
    return GL2(l1[0], l2[0], l1[1], l2[1]).inverse()


def match_exceptional(w: NcPoly, eid: str) -> GL2:
    """sigma with sigma(relations of w) == relations of E_eid, as spans."""
    c = project_c(w)
    rels = relations(c)
    target = EXCEPTIONAL_RELATIONS[eid]
    cands = []
    if eid in ("E1", "E2", "E5"):
        dirs = cube_roots_in_span(rels)
        if eid == "E1" and dirs:
            (u, v) = dirs[0]
            other = (0, 1) if u != 0 else (1, 0)
            cands.append(_basis_from_images((u, v), other))
        if eid == "E5" and len(dirs) >= 2:
            cands.append(_basis_from_images(dirs[0], dirs[1]))
        if eid == "E2" and dirs:
            (u, v) = dirs[0]
            # x^3 is the cube; the second relation fixes the companion direction
            for other in ((0, 1), (1, 0)):
                try:
                    base = _basis_from_images((u, v), other)
                except ValueError:
                    continue
                cands.append(base)
                img = [apply_gl2(base, r) for r in rels]
                # shear y -> y + t x kills the y x^2-type leftovers when needed
                for r in img:
                    t = _shear_to_e2(r)
                    if t is not None:
                        cands.append(GL2(1, t, 0, 1) @ base)
    else:
        nq = normalize_quartic(bar(c))
        cands.append(nq.sigma)
        if eid == "E4":
            wn = apply_gl2(nq.sigma, c)
            co = sp_coords(wn)
            # wn ~ beta w2 + w5 with the w5 coefficient q: scale y by sqrt(q / beta)
            _, r = adjoin_sqrt(_tower(wn, nq.sigma), co[4] / co[1])
            cands.append(GL2(1, 0, 0, r) @ nq.sigma)
    for s in cands:
        if same_span([apply_gl2(s, r) for r in rels], target):
            return s
    raise ExtensionUnavailable(f"no transform to {eid} found")


def _shear_to_e2(r: NcPoly):
    """If r = k(x^2y + xyx + yx^2) + m x^3, the shear y -> y + t x removing m."""
    k = r.coeff("xxy")
    if k == 0 or r.coeff("xyx") != k or r.coeff("yxx") != k:
        return None
    m = r.coeff("xxx")
    return -m / (3 * k) if m != 0 else None


# -- equivalence of Calabi-Yau potentials -----------------------------------------------------

def proportional(a: NcPoly, b: NcPoly):
    """k with a == k b, or None."""
    if a.is_zero() or b.is_zero():
        return None if a.is_zero() != b.is_zero() else Fraction(1)
    word, cb = next(iter(b.items()))
    k = a.coeff(word) / cb
    return k if a == b * k else None


def _residual_candidates(tag: str, w1n: NcPoly, w2n: NcPoly):
    if tag in ("Zero", "DoubleDouble", "DoublePlusTwo", "TriplePlusOne"):
        yield GL2.identity()
        if tag == "DoublePlusTwo":
            yield GL2(1, 0, 0, -1)
        if tag == "TriplePlusOne":
            a1 = sp_coords(w1n)[0]
            a2 = sp_coords(w2n)[0]
            if a1 != 0 and a2 != 0:
                yield GL2(1, 0, 0, a2 / a1)
        return
    if tag == "Quadruple":
        a1 = sp_coords(w1n)[0]
        a2 = sp_coords(w2n)[0]
        if a1 != 0 and a2 != 0:
            _, d = adjoin_sqrt(_tower(w1n, w2n), a2 / a1)
            yield GL2(1, 0, 0, d)
            yield GL2(1, 0, 0, -d)
        return
    if tag == "FourDistinct":
        _, i = adjoin_sqrt(_tower(w1n, w2n), -1)
        units = (1, -1, i, -i)
        for z in units:
            yield GL2(1, 0, 0, z)
            yield GL2(0, 1, z, 0)
        for b in units:
            for xi in units:
                try:
                    yield GL2(1, -xi, b, xi * b)
                except ValueError:
                    continue


def potentials_equivalent(w1: NcPoly, w2: NcPoly) -> Optional[GL2]:
    """sigma with sigma(c(w1)) proportional to c(w2), or None when inequivalent."""
    c1, c2 = project_c(w1), project_c(w2)
    r1, r2 = classify(c1), classify(c2)
    for r in (r1, r2):
        if r.cy is None or not r.cy.is_cy:
            raise PreconditionViolated("potentials_equivalent needs Calabi-Yau potentials")
    if r1.table_row != r2.table_row or r1.quartic_class.tag != r2.quartic_class.tag:
        return None
    if r1.normalizing_sigma is None or r2.normalizing_sigma is None:
        raise ExtensionUnavailable("normal forms are out of reach")
    w1n, w2n = r1.normalized_potential, r2.normalized_potential
    for tau in _residual_candidates(r1.quartic_class.tag, w1n, w2n):
        if proportional(apply_gl2(tau, w1n), w2n) is not None:
            sigma = r2.normalizing_sigma.inverse() @ tau @ r1.normalizing_sigma
            if proportional(apply_gl2(sigma, c1), c2) is None:
                raise AssertionError("composed transform failed the substitution check")
            return sigma
    return None
