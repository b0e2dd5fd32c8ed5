"""Binary forms, the abelianization bridge, and binary quartics up to GL(2).

A :class:`BinForm` of degree d stores c_0..c_d, the coefficients of
x^(d-i) y^i.  Points of P^1 are pairs (p, q); a form vanishes at (p, q) when
f(p, q) = 0, and the point (p, q) corresponds to the linear factor q*x - p*y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import roots as R
from .errors import DegreeMismatch, ExtensionUnavailable, PreconditionViolated, TowerDepthExceeded
from .ncpoly import GL2, NcPoly, all_words
from .scalars import QQ, FieldTower, Scalar, adjoin_sqrt, format_scalar, is_rational, join_towers, to_scalar, tower_of

ZERO = Fraction(0)


class BinForm:
    """Homogeneous polynomial in commuting x, y."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Optional[Sequence] = None):
        if coeffs is None:
            coeffs = [0] * (degree + 1)
        if len(coeffs) != degree + 1:
            raise DegreeMismatch(f"a degree-{degree} form needs {degree + 1} coefficients")
        self.degree = degree
        self.coeffs = tuple(to_scalar(c) for c in coeffs)

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "BinForm":
        """coeff * x^i y^j."""
        c = [0] * (i + j + 1)
        c[j] = coeff
        return cls(i + j, c)

    @classmethod
    def linear(cls, u, v) -> "BinForm":
        return cls(1, [u, v])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, BinForm):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeMismatch("forms of different degree")
        return BinForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinForm(self.degree, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BinForm):
            out = [ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinForm(self.degree + other.degree, out)
        c = to_scalar(other)
        return BinForm(self.degree, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = to_scalar(other)
        return BinForm(self.degree, [a / c for a in self.coeffs])

    def __pow__(self, k: int):
        out = BinForm(0, [1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BinForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, p, q):
        total = ZERO
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if c != 0:
                total = total + c * to_scalar(p) ** (d - i) * to_scalar(q) ** i
        return total

    def dx(self) -> "BinForm":
        d = self.degree
        return BinForm(d - 1, [(d - i) * c for i, c in enumerate(self.coeffs[:-1])])

    def dy(self) -> "BinForm":
        return BinForm(self.degree - 1, [i * c for i, c in enumerate(self.coeffs) if i > 0])

    def leading(self) -> Scalar:
        return next((c for c in self.coeffs if c != 0), ZERO)

    def normalized(self) -> "BinForm":
        """Scale so the first nonzero coefficient is 1."""
        lead = self.leading()
        return self if lead == 0 else self / lead

    def proportional(self, other: "BinForm") -> bool:
        if self.degree != other.degree:
            return False
        return self.normalized() == other.normalized()

    def __repr__(self):
        return f"BinForm({format_binform(self)!r})"

    def __str__(self):
        return format_binform(self)


def _mono_text(names, i, j):
    parts = []
    for name, e in ((names[0], i), (names[1], j)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(terms) -> str:
    """Join (coefficient, monomial text) pairs into a signed sum."""
    out = ""
    for c, mono in terms:
        if c == 0:
            continue
        if is_rational(c):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mag_txt = "" if (mag == 1 and mono) else format_scalar(mag)
        else:
            txt = format_scalar(c)
            if " " in txt:
                sign, mag_txt = "+", f"({txt})"
            elif txt.startswith("-"):
                sign, mag_txt = "-", txt[1:]
            else:
                sign, mag_txt = "+", txt
        body = "*".join(p for p in (mag_txt, mono) if p)
        if not out:
            out = body if sign == "+" else "-" + body
        else:
            out += f" {sign} {body}"
    return out or "0"


def format_binform(f: BinForm, names=("x", "y")) -> str:
    d = f.degree
    return format_terms([(c, _mono_text(names, d - i, i)) for i, c in enumerate(f.coeffs)])


# -- bar and tilde ------------------------------------------------------------------

def bar(w: NcPoly) -> BinForm:
    """Abelianization: let the letters commute."""
    c = [ZERO] * (w.degree + 1)
    for word, a in w.terms.items():
        k = word.count("y")
        c[k] = c[k] + a
    return BinForm(w.degree, c)


def tilde(f: BinForm) -> NcPoly:
    """The symmetric tensor whose abelianization is f."""
    d = f.degree
    out = {}
    for word in all_words(d):
        k = word.count("y")
        if f.coeffs[k] != 0:
            out[word] = f.coeffs[k] / math.comb(d, k)
    return NcPoly(d, out)


def apply_gl2_form(sigma: GL2, f: BinForm) -> BinForm:
    """Substitute x -> a x + c y, y -> b x + d y, as for noncommutative words."""
    lx = BinForm.linear(sigma.a, sigma.c)
    ly = BinForm.linear(sigma.b, sigma.d)
    d = f.degree
    out = BinForm(d)
    for i, c in enumerate(f.coeffs):
        if c != 0:
            out = out + (lx ** (d - i)) * (ly ** i) * c
    return out


# -- gcd and roots via the affine chart y = 1 ---------------------------------------------

def _chart(f: BinForm):
    """(p, k): p(t) = f(t, 1) lowest degree first, k = multiplicity of the factor y."""
    p = R.trim(list(reversed(f.coeffs)))
    return p, f.degree - R.degree(p)


def _homog(p, d: int) -> BinForm:
    c = [ZERO] * (d + 1)
    for j, a in enumerate(p):
        c[d - j] = a
    return BinForm(d, c)


def gcd(f: BinForm, g: BinForm) -> BinForm:
    """Greatest common divisor, monic in the chart y = 1 (or a power of y)."""
    if f.is_zero() and g.is_zero():
        return BinForm(0, [0])
    if g.is_zero():
        f, g = g, f
    if f.is_zero():
        p, k = _chart(g)
        return _homog(R.monic(p), g.degree)
    p, kp = _chart(f)
    q, kq = _chart(g)
    h = R.pgcd(p, q)
    k = min(kp, kq)
    return _homog(h, R.degree(h) + k)


def binform_roots(f: BinForm, tower: FieldTower | None = None):
    """Roots of f in P^1 within a quadratic tower.

    Returns ``(tower, [((p, q), multiplicity), ...], residual)``; ``residual``
    is the chart polynomial whose roots were unreachable (``[1]`` if none).
    """
    if f.is_zero():
        raise ValueError("the zero form vanishes everywhere")
    p, k = _chart(f)
    tower = join_towers(tower or QQ, tower_of(*f.coeffs))
    pts = []
    residual = [Fraction(1)]
    if R.degree(p) > 0:
        tower, found, residual = R.find_roots(p, tower)
        pts = [((r, Fraction(1)), m) for r, m in found]
    if k:
        pts.append(((Fraction(1), Fraction(0)), k))
    return tower, pts, residual


def linear_factor(pt) -> BinForm:
    p, q = pt
    return BinForm.linear(q, -p)


def _is_squarefree(f: BinForm) -> bool:
    return gcd(f.dx(), f.dy()).degree == 0 if f.degree > 1 else True


# -- quartic invariants and classification ---------------------------------------------------

TAGS = ("Zero", "Quadruple", "TriplePlusOne", "DoubleDouble", "DoublePlusTwo", "FourDistinct")


def quartic_invariants(f: BinForm):
    """(I, J, Delta) for f = a x^4 + 4b x^3y + 6c x^2y^2 + 4d xy^3 + e y^4."""
    if f.degree != 4:
        raise DegreeMismatch("quartic invariants need a degree-4 form")
    c0, c1, c2, c3, c4 = f.coeffs
    a, b, c, d, e = c0, c1 / 4, c2 / 6, c3 / 4, c4
    inv_i = a * e - 4 * b * d + 3 * c * c
    inv_j = a * c * e + 2 * b * c * d - a * d * d - b * b * e - c ** 3
    return inv_i, inv_j, inv_i ** 3 - 27 * inv_j ** 2


def glambda(lam) -> BinForm:
    return BinForm(4, [1, 0, lam, 0, 1])


def glambda_invariants(lam):
    lam = to_scalar(lam)
    return 1 + lam * lam / 12, lam / 6 - (lam / 6) ** 3


def glambda_orbit(lam) -> set:
    """All lam' with g_lam ~ g_lam', from the equivalence conditions."""
    lam = to_scalar(lam)
    out = {lam, -lam}
    for s in (1, -1):
        base = 2 + s * lam
        if base != 0:
            out.add(16 / base - 2)
            out.add(2 - 16 / base)
    return out


def equivalent_glambda(l1, l2) -> bool:
    """lam' = +-lam or (2 +- lam)(2 +- lam') = 16 with independent signs."""
    l1, l2 = to_scalar(l1), to_scalar(l2)
    for v in (l1, l2):
        if v == 2 or v == -2:
            raise PreconditionViolated("g_lambda needs lambda != +-2")
    if l2 == l1 or l2 == -l1:
        return True
    return any((2 + s * l1) * (2 + t * l2) == 16 for s in (1, -1) for t in (1, -1))


@dataclass
class QuarticClass:
    tag: str
    invariants: tuple
    lambda_invariant: Optional[Scalar] = None
    lambda_error: Optional[str] = None

    def __str__(self):
        if self.lambda_invariant is not None:
            return f"{self.tag}(lambda={format_scalar(self.lambda_invariant)})"
        return self.tag


def _lambda_polynomial(inv_i, inv_j):
    """Polynomial in lam whose roots are the lam with g_lam ~ f (given f's I, J)."""
    # J(lam)^2 I^3 - J^2 I(lam)^3, expanded with lam as the variable
    jl = [ZERO, Fraction(1, 6), ZERO, Fraction(-1, 216)]
    il = [Fraction(1), ZERO, Fraction(1, 12)]
    lhs = R.pscale(R.pmul(jl, jl), inv_i ** 3)
    rhs = R.pscale(R.pmul(il, R.pmul(il, il)), inv_j ** 2)
    return R.psub(lhs, rhs)


def recover_lambda(f: BinForm, tower: FieldTower | None = None):
    """Some lam with g_lam equivalent to f, or raise ExtensionUnavailable."""
    inv_i, inv_j, _ = quartic_invariants(f)
    poly = _lambda_polynomial(inv_i, inv_j)
    try:
        _, found, _ = R.find_roots(poly, tower)
    except TowerDepthExceeded as exc:
        raise ExtensionUnavailable(str(exc)) from exc
    cands = [r for r, _ in found if r != 2 and r != -2]
    if not cands:
        raise ExtensionUnavailable("no lambda reachable in a quadratic tower")
    # prefer rational, then short printed forms
    cands.sort(key=lambda r: (not is_rational(r), len(format_scalar(r)), format_scalar(r)))
    return cands[0]


def classify_quartic(f: BinForm) -> QuarticClass:
    if f.degree != 4:
        raise DegreeMismatch("classify_quartic expects a quartic")
    inv = quartic_invariants(f)
    if f.is_zero():
        return QuarticClass("Zero", inv)
    g = gcd(f.dx(), f.dy())
    k = g.degree
    if k == 0:
        tag = "FourDistinct"
    elif k == 1:
        tag = "DoublePlusTwo"
    elif k == 3:
        tag = "Quadruple"
    else:
        tag = "DoubleDouble" if _is_squarefree(g) else "TriplePlusOne"
    out = QuarticClass(tag, inv)
    if tag == "FourDistinct":
        try:
            out.lambda_invariant = recover_lambda(f)
        except ExtensionUnavailable as exc:
            out.lambda_error = str(exc)
    return out


# -- normal forms ---------------------------------------------------------------------

NORMAL_FORMS = {
    "Zero": BinForm(4),
    "Quadruple": BinForm(4, [1, 0, 0, 0, 0]),
    "TriplePlusOne": BinForm(4, [0, 1, 0, 0, 0]),
    "DoubleDouble": BinForm(4, [0, 0, 1, 0, 0]),
    "DoublePlusTwo": BinForm(4, [1, 0, 1, 0, 0]),
}


@dataclass
class NormalizedQuartic:
    """sigma(f) == scale * form, with form one of f1..f5 or g_lambda."""

    tag: str
    sigma: GL2
    form: BinForm
    scale: Scalar
    lam: Optional[Scalar] = None
    tower: FieldTower = field(default=QQ)


def _basis_to(l1: BinForm, l2: BinForm) -> GL2:
    """sigma with sigma(l1) = x and sigma(l2) = y.

    Coefficient columns of linear forms transform by the matrix itself, so
    sigma is the inverse of the matrix with columns l1, l2.
    """
    (u1, v1), (u2, v2) = l1.coeffs, l2.coeffs
    return GL2(u1, u2, v1, v2).inverse()


def _complement(l1: BinForm) -> BinForm:
    u, _ = l1.coeffs
    return BinForm.linear(0, 1) if u != 0 else BinForm.linear(1, 0)


def _sqrt(tower, r):
    try:
        return adjoin_sqrt(tower, r)
    except TowerDepthExceeded as exc:
        raise ExtensionUnavailable(str(exc)) from exc


def _roots_or_fail(f: BinForm, tower):
    tower, pts, residual = binform_roots(f, tower)
    if R.degree(residual) > 0:
        raise ExtensionUnavailable(f"roots of {format_binform(f)} are not in a reachable tower")
    return tower, pts


def _finish(tag, sigma, f, tower, lam=None):
    img = apply_gl2_form(sigma, f)
    form = glambda(lam) if tag == "FourDistinct" else NORMAL_FORMS[tag]
    idx = next(i for i, c in enumerate(form.coeffs) if c != 0)
    scale = img.coeffs[idx] / form.coeffs[idx]
    if img != form * scale:
        raise AssertionError("normalization failed to reach the normal form")
    return NormalizedQuartic(tag, sigma, form, scale, lam, join_towers(tower, tower_of(*sigma.rows()[0], *sigma.rows()[1])))


def _diagonal_quartic(f: BinForm, tower):
    """For f = c0 x^4 + c2 x^2y^2 + c4 y^4: rescale x to reach g_lambda."""
    c0, _, c2, _, c4 = f.coeffs
    tower, t2 = _sqrt(tower, c4 / c0)
    tower, t = _sqrt(tower, t2)
    lam = c2 * t2 / c4
    return GL2(t, 0, 0, 1), lam, tower


def _pencil_diagonalize(q1: BinForm, q2: BinForm, tower):
    """sigma making two coprime binary quadratics both diagonal."""
    a1, b1, c1 = q1.coeffs
    a2, b2, c2 = q2.coeffs
    # disc(q1 - t q2) as a polynomial in t
    disc = R.trim([
        b1 * b1 - 4 * a1 * c1,
        -2 * b1 * b2 + 4 * (a1 * c2 + a2 * c1),
        b2 * b2 - 4 * a2 * c2,
    ])
    try:
        tower, found, residual = R.find_roots(disc, tower)
    except TowerDepthExceeded as exc:
        raise ExtensionUnavailable(str(exc)) from exc
    ts = [r for r, _ in found]
    if len(ts) != 2:
        raise ExtensionUnavailable("pencil has no two distinct degenerate members in reach")
    squares = []
    for t in ts:
        a, b, c = (q1 - q2 * t).coeffs
        squares.append(BinForm.linear(1, b / (2 * a)) if a != 0 else BinForm.linear(0, 1))
    return _basis_to(squares[0], squares[1]), tower


def _quadratic_pairs(f: BinForm, tower):
    """Split a squarefree quartic into two quadratic factors."""
    p, k = _chart(f)
    lead = f.leading()
    if all(is_rational(c) for c in f.coeffs) and k == 0:
        facs = R._factor_rational(R.monic(p))
        degs = sorted(R.degree(q) for q in facs)
        if degs in ([2, 2], [1, 1, 2], [1, 1, 1, 1]):
            facs.sort(key=R.degree, reverse=True)
            first = facs[0] if R.degree(facs[0]) == 2 else R.pmul(facs[0], facs[1])
            rest = facs[1:] if R.degree(facs[0]) == 2 else facs[2:]
            second = [Fraction(1)]
            for q in rest:
                second = R.pmul(second, q)
            return _homog(first, 2) * lead, _homog(second, 2), tower
    tower, pts = _roots_or_fail(f, tower)
    lins = [linear_factor(pt) for pt, _ in pts]
    q1 = lins[0] * lins[1]
    q2 = lins[2] * lins[3]
    return q1, q2, tower


def normalize_quartic(f: BinForm, tower: FieldTower | None = None) -> NormalizedQuartic:
    """Find sigma with sigma(f) = s * n for the normal form n of f's class."""
    tower = join_towers(tower or QQ, tower_of(*f.coeffs))
    cls = classify_quartic(f)
    tag = cls.tag
    if tag == "Zero":
        return NormalizedQuartic(tag, GL2.identity(), BinForm(4), Fraction(1), tower=tower)
    if tag == "FourDistinct":
        c0, c1, _, c3, c4 = f.coeffs
        if c1 == 0 and c3 == 0 and c0 != 0 and c4 != 0:
            if c0 == c4:
                return _finish(tag, GL2.identity(), f, tower, f.coeffs[2] / c0)
            sigma, lam, tower = _diagonal_quartic(f, tower)
            return _finish(tag, sigma, f, tower, lam)
        q1, q2, tower = _quadratic_pairs(f, tower)
        s1, tower = _pencil_diagonalize(q1, q2, tower)
        g = apply_gl2_form(s1, f)
        s2, lam, tower = _diagonal_quartic(g, tower)
        return _finish(tag, s2 @ s1, f, tower, lam)
    # repeated roots: the multiple factors are rational in the coefficients
    if tag in ("Quadruple", "TriplePlusOne", "DoubleDouble"):
        tower, pts = _roots_or_fail(f, tower)
        pts.sort(key=lambda pm: -pm[1])
        l1 = linear_factor(pts[0][0])
        l2 = linear_factor(pts[1][0]) if len(pts) > 1 else _complement(l1)
        return _finish(tag, _basis_to(l1, l2), f, tower)
    # DoublePlusTwo: move the double root to x, shear, then rescale y
    g = gcd(f.dx(), f.dy())
    l1 = g * (1 / g.leading())
    s1 = _basis_to(l1, _complement(l1))
    h = apply_gl2_form(s1, f)
    # h = x^2 * (A x^2 + B xy + C y^2)
    A, B, C, _, _ = h.coeffs
    s2 = GL2(1, -B / (2 * C), 0, 1)
    h2 = apply_gl2_form(s2 @ s1, f)
    tower, r = _sqrt(tower, h2.coeffs[0] / C)
    s3 = GL2(1, 0, 0, r)
    return _finish(tag, s3 @ s2 @ s1, f, tower)
