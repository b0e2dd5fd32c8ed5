"""Bidegree-(2, 2) curves on P^1 x P^1: factoring, intersections, singularities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import roots as R
from .comm import BinForm, _chart, _homog, binform_roots, gcd
from .cy import WHOLE_SURFACE, BiForm, WholeSurface, format_biform, normalize_point
from .errors import ExtensionUnavailable, TowerDepthExceeded
from .scalars import QQ, FieldTower, adjoin_sqrt, format_scalar, join_towers, tower_of

ZERO = Fraction(0)
CURVE_TAGS = (
    "WholeSurface", "Double11", "Two11Meet1", "Two11Meet2", "IrreducibleCusp",
    "IrreducibleBiflecnode", "Smooth22", "DoubleRulingPair", "FourRulings", "Other",
)


def _tower_of_biform(h: BiForm, tower=None):
    return join_towers(tower or QQ, tower_of(*h.terms.values()))


def _divide_form(f: BinForm, g: BinForm) -> BinForm:
    """Exact quotient of binary forms."""
    fp, _ = _chart(f)
    gp, _ = _chart(g)
    q, r = R.pdivmod(fp, gp)
    if r:
        raise ValueError("form does not divide")
    return _homog(q, f.degree - g.degree)


def _first_form(g: BinForm) -> BiForm:
    return BiForm((g.degree, 0), {(i, 0): c for i, c in enumerate(g.coeffs)})


def _second_form(g: BinForm) -> BiForm:
    return BiForm((0, g.degree), {(0, j): c for j, c in enumerate(g.coeffs)})


def _columns(h: BiForm):
    return h.as_quadratic_in_second()


def _from_columns(cols, a: int) -> BiForm:
    terms = {}
    for j, col in enumerate(cols):
        for i, c in enumerate(col.coeffs):
            terms[(i, j)] = c
    return BiForm((a, len(cols) - 1), terms)


def _content_first(h: BiForm) -> BinForm:
    cols = [c for c in _columns(h) if not c.is_zero()]
    g = cols[0]
    for c in cols[1:]:
        g = gcd(g, c)
    return g


def _divide_first(h: BiForm, g: BinForm) -> BiForm:
    cols = [_divide_form(c, g) if not c.is_zero() else BinForm(h.bidegree[0] - g.degree) for c in _columns(h)]
    return _from_columns(cols, h.bidegree[0] - g.degree)


def form_sqrt(f: BinForm, tower: FieldTower):
    """(tower, q) with q^2 == f for a binary form of even degree, or None.

    Undetermined coefficients; adjoins at most one square root (of the leading
    coefficient).
    """
    d = f.degree
    if d % 2:
        return None
    if f.is_zero():
        return tower, BinForm(d // 2)
    z = next(i for i, c in enumerate(f.coeffs) if c != 0)
    if z % 2:
        return None
    rest = f.coeffs[z:]
    m = (len(rest) - 1) // 2
    if (len(rest) - 1) % 2:
        return None
    try:
        tower, q0 = adjoin_sqrt(tower, rest[0])
    except TowerDepthExceeded as exc:
        raise ExtensionUnavailable(str(exc)) from exc
    q = [q0]
    for k in range(1, m + 1):
        s = sum((q[i] * q[k - i] for i in range(1, k)), ZERO)
        q.append((rest[k] - s) / (2 * q0))
    cand = BinForm(m, q)
    if cand * cand != BinForm(len(rest) - 1, list(rest)):
        return None
    return tower, BinForm(d // 2, [ZERO] * (z // 2) + q)


@dataclass
class Factorization:
    """h == constant * prod(component ** multiplicity)."""

    constant: object
    components: list
    tower: FieldTower = field(default=QQ)

    @property
    def irreducible(self) -> bool:
        return len(self.components) == 1 and self.components[0][1] == 1

    def product(self) -> BiForm:
        out = BiForm((0, 0), {(0, 0): self.constant})
        for comp, mult in self.components:
            out = out * comp ** mult
        return out


def _linear_factors(g: BinForm, tower, side: str):
    """Split a binary form into linear factors as (1,0) or (0,1) components."""
    out = []
    if g.degree == 0:
        return out, tower
    tower, pts, residual = binform_roots(g, tower)
    if R.degree(residual) > 0:
        raise ExtensionUnavailable("linear factors of a ruling component are out of reach")
    for (p, q), mult in pts:
        lin = BinForm.linear(q, -p)
        out.append(((_first_form(lin) if side == "first" else _second_form(lin)), mult))
    return out, tower


def _primitive_part_normal(comp: BiForm) -> BiForm:
    return comp.normalized()


def factor_22(h: BiForm, tower: FieldTower | None = None) -> Factorization:
    if h.is_zero():
        raise ValueError("cannot factor the zero form")
    tower = _tower_of_biform(h, tower)
    c1 = _content_first(h)
    prim = _divide_first(h, c1)
    c2 = _content_first(prim.swap_factors())
    prim = _divide_first(prim.swap_factors(), c2).swap_factors()
    comps = []
    for g, side in ((c1, "first"), (c2, "second")):
        lins, tower = _linear_factors(g, tower, side)
        comps.extend(lins)
    a, b = prim.bidegree
    if (a, b) == (2, 2):
        split = _split_22(prim, tower)
        if split is None:
            comps.append((prim, 1))
        else:
            parts, tower = split
            comps.extend(parts)
    elif (a, b) != (0, 0):
        comps.append((prim, 1))
    comps = [(c.normalized(), m) for c, m in comps]
    prod = BiForm((0, 0), {(0, 0): 1})
    for c, m in comps:
        prod = prod * c ** m
    const = h.leading() / prod.leading()
    return Factorization(const, _merge(comps), tower)


def _merge(comps):
    out = []
    for c, m in comps:
        for k, (d, n) in enumerate(out):
            if d == c:
                out[k] = (d, n + m)
                break
        else:
            out.append((c, m))
    return out


def _split_22(p: BiForm, tower):
    """Split a primitive (2,2) form into two (1,1) forms, or None."""
    A, B, C = _columns(p)
    D = B * B - A * C * 4
    root = form_sqrt(D, tower)
    if root is None:
        return None
    tower, Q = root
    lin1 = _from_columns([A * 2, B - Q], 2)
    lin2 = _from_columns([A * 2, B + Q], 2)
    f1 = _divide_first(lin1, _content_first(lin1))
    f2 = _divide_first(lin2, _content_first(lin2))
    if f1.bidegree != (1, 1) or f2.bidegree != (1, 1):
        return None
    if f1.proportional(f2):
        return [(f1, 2)], tower
    return [(f1, 1), (f2, 1)], tower


# -- intersections -------------------------------------------------------------------------

@dataclass
class Intersection:
    count: Optional[int]  # None when the curves share a component
    points: list


def _row_pair(c: BiForm):
    """(coefficient of x2, coefficient of y2), each a linear form in (x1, y1)."""
    cols = _columns(c)
    return cols[0], cols[1]


def intersect_11(c1: BiForm, c2: BiForm, tower: FieldTower | None = None) -> Intersection:
    a1, b1 = _row_pair(c1)
    a2, b2 = _row_pair(c2)
    det = a1 * b2 - b1 * a2
    if det.is_zero():
        return Intersection(None, [])
    tower = join_towers(tower or QQ, tower_of(*c1.terms.values(), *c2.terms.values()))
    u, v, w = det.coeffs
    count = 1 if v * v - 4 * u * w == 0 else 2
    points = []
    tower, pts, _ = binform_roots(det, tower)
    for p, _ in pts:
        r = [a1(*p), b1(*p)]
        if r[0] == 0 and r[1] == 0:
            r = [a2(*p), b2(*p)]
        if r[0] == 0 and r[1] == 0:
            return Intersection(None, [])
        points.append((normalize_point(p), normalize_point((-r[1], r[0]))))
    return Intersection(count, points)


# -- singular points --------------------------------------------------------------------------

@dataclass
class SingularPoint:
    point: tuple
    rank: int

    @property
    def kind(self) -> str:
        return {1: "cusp", 2: "node"}.get(self.rank, "degenerate")


def _eval_second(h: BiForm, X: BinForm, Y: BinForm) -> BinForm:
    """Substitute (x2, y2) := (X, Y), forms in (x1, y1); result is a form in (x1, y1)."""
    cols = _columns(h)
    b = h.bidegree[1]
    out = None
    for j, col in enumerate(cols):
        term = col * X ** (b - j) * Y ** j
        out = term if out is None else out + term
    return out


def singular_points_22(h: BiForm, tower: FieldTower | None = None):
    """Singular points of V(h) with the rank of the local quadratic part.

    Returns ``(tower, points)``.  Raises ExtensionUnavailable when candidate
    coordinates are out of reach.
    """
    tower = _tower_of_biform(h, tower)
    parts = {v: h.derivative(v) for v in ("x1", "y1", "x2", "y2")}
    # p-coordinates: M(p) q = 0 for the two linear-in-q partials
    lx, ly = parts["x2"], parts["y2"]
    ax, bx = _row_pair(lx)
    ay, by = _row_pair(ly)
    cands = [ax * by - bx * ay]
    # resultant with the root (-b, a) of the first linear partial
    for v in ("x1", "y1"):
        cands.append(_eval_second(parts[v], -bx, ax))
        cands.append(_eval_second(parts[v], -by, ay))
    nonzero = [c for c in cands if not c.is_zero()]
    if not nonzero:
        raise ValueError("singular locus is not finite")
    g = nonzero[0]
    for c in nonzero[1:]:
        g = gcd(g, c)
    if g.degree == 0:
        return tower, []
    tower, pts, residual = binform_roots(g, tower)
    if R.degree(residual) > 0:
        raise ExtensionUnavailable("singular point coordinates are out of reach")
    found = []
    for p, _ in pts:
        specs = [f.in_first(p) for f in [h] + list(parts.values())]
        specs = [s for s in specs if not s.is_zero()]
        if not specs:
            raise ValueError("a whole ruling is singular")
        gq = specs[0]
        for s in specs[1:]:
            gq = gcd(gq, s)
        if gq.degree == 0:
            continue
        tower, qs, residual = binform_roots(gq, tower)
        if R.degree(residual) > 0:
            raise ExtensionUnavailable("singular point coordinates are out of reach")
        for q, _ in qs:
            pt = (normalize_point(p), normalize_point(q))
            found.append(SingularPoint(pt, _local_rank(h, pt)))
    return tower, found


def _local_rank(h: BiForm, pt) -> int:
    p, q = pt
    v1 = "y1" if p[0] != 0 else "x1"
    v2 = "y2" if q[0] != 0 else "x2"
    h11 = h.derivative(v1).derivative(v1)(p, q)
    h12 = h.derivative(v1).derivative(v2)(p, q)
    h22 = h.derivative(v2).derivative(v2)(p, q)
    if h11 * h22 - h12 * h12 != 0:
        return 2
    return 1 if (h11, h12, h22) != (0, 0, 0) else 0


# -- classification -----------------------------------------------------------------------------

@dataclass
class CurveClass:
    tag: str
    components: list = field(default_factory=list)
    singular_points: list = field(default_factory=list)
    intersection: Optional[Intersection] = None

    def __str__(self):
        return self.tag


def classify_curve(h, tower: FieldTower | None = None) -> CurveClass:
    if isinstance(h, WholeSurface) or (isinstance(h, BiForm) and h.is_zero()):
        return CurveClass("WholeSurface")
    fac = factor_22(h, tower)
    comps = fac.components
    shape = sorted((c.bidegree, m) for c, m in comps)
    if shape == [((1, 1), 2)]:
        return CurveClass("Double11", comps)
    if shape == [((0, 1), 2), ((1, 0), 2)]:
        return CurveClass("DoubleRulingPair", comps)
    if shape == [((0, 1), 1), ((0, 1), 1), ((1, 0), 1), ((1, 0), 1)]:
        return CurveClass("FourRulings", comps)
    if shape == [((1, 1), 1), ((1, 1), 1)]:
        meet = intersect_11(comps[0][0], comps[1][0], fac.tower)
        tag = {1: "Two11Meet1", 2: "Two11Meet2"}.get(meet.count, "Other")
        return CurveClass(tag, comps, intersection=meet)
    if shape == [((2, 2), 1)]:
        _, sing = singular_points_22(comps[0][0], fac.tower)
        if not sing:
            return CurveClass("Smooth22", comps)
        if len(sing) == 1:
            tag = "IrreducibleCusp" if sing[0].rank == 1 else (
                "IrreducibleBiflecnode" if sing[0].rank == 2 else "Other")
            return CurveClass(tag, comps, sing)
        return CurveClass("Other", comps, sing)
    return CurveClass("Other", comps)


def format_factorization(f: Factorization) -> str:
    """Product form such as ``(x1*y2 - y1*x2)^2``."""
    parts = []
    for comp, mult in f.components:
        text = format_biform(comp)
        if mult > 1 or (" " in text and (len(f.components) > 1 or f.constant != 1)):
            text = f"({text})"
        parts.append(text if mult == 1 else f"{text}^{mult}")
    body = "*".join(parts) or "1"
    if f.constant == 1:
        return body
    c = format_scalar(f.constant)
    return f"-{body}" if f.constant == -1 else f"({c})*{body}"
