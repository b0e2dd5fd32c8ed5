"""Standardness, the matrix M(w), the Calabi-Yau test and the point scheme.

Bihomogeneous forms live on P^1 x P^1 with coordinates (x1, y1; x2, y2).  A
degree-2 tensor u v becomes the bidegree-(1, 1) form u(x1, y1) v(x2, y2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import roots as R
from .comm import BinForm, binform_roots, format_terms, gcd
from .errors import AmbiguousThirdPoint, NotOnE, PreconditionViolated
from .ncpoly import NcPoly, X, Y, dleft, dright, project_c
from .scalars import QQ, Scalar, format_scalar, to_scalar

ZERO = Fraction(0)
LETTERS = "xy"


class BiForm:
    """Bihomogeneous form; key (i, j) is the coefficient of x1^(a-i) y1^i x2^(b-j) y2^j."""

    __slots__ = ("bidegree", "terms")

    def __init__(self, bidegree, terms=None):
        self.bidegree = tuple(bidegree)
        a, b = self.bidegree
        clean = {}
        for (i, j), c in (terms or {}).items():
            if not (0 <= i <= a and 0 <= j <= b):
                raise ValueError(f"index {(i, j)} outside bidegree {self.bidegree}")
            if c != 0:
                clean[(i, j)] = to_scalar(c)
        self.terms = clean

    @classmethod
    def from_linear(cls, first, second) -> "BiForm":
        """Product u(x1, y1) * v(x2, y2) for coefficient pairs u, v."""
        return cls((1, 1), {(i, j): first[i] * second[j] for i in range(2) for j in range(2)})

    def coeff(self, i, j) -> Scalar:
        return self.terms.get((i, j), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if self.bidegree != other.bidegree:
            raise ValueError("bidegrees differ")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiForm(self.bidegree, out)

    def __neg__(self):
        return BiForm(self.bidegree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiForm):
            out = {}
            for (i, j), a in self.terms.items():
                for (k, l), b in other.terms.items():
                    key = (i + k, j + l)
                    out[key] = out.get(key, 0) + a * b
            bd = (self.bidegree[0] + other.bidegree[0], self.bidegree[1] + other.bidegree[1])
            return BiForm(bd, out)
        c = to_scalar(other)
        return BiForm(self.bidegree, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = to_scalar(other)
        return BiForm(self.bidegree, {k: v / c for k, v in self.terms.items()})

    def __pow__(self, k: int):
        out = BiForm((0, 0), {(0, 0): 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        return self.bidegree == other.bidegree and self.terms == other.terms

    def __hash__(self):
        return hash((self.bidegree, frozenset(self.terms.items())))

    def keys_in_order(self):
        a, b = self.bidegree
        return [(i, j) for i in range(a + 1) for j in range(b + 1)]

    def leading(self) -> Scalar:
        for k in self.keys_in_order():
            if k in self.terms:
                return self.terms[k]
        return ZERO

    def normalized(self) -> "BiForm":
        lead = self.leading()
        return self if lead == 0 else self / lead

    def proportional(self, other: "BiForm") -> bool:
        return self.bidegree == other.bidegree and self.normalized() == other.normalized()

    def __call__(self, p1, p2) -> Scalar:
        a, b = self.bidegree
        (u1, v1), (u2, v2) = p1, p2
        total = ZERO
        for (i, j), c in self.terms.items():
            total = total + c * u1 ** (a - i) * v1 ** i * u2 ** (b - j) * v2 ** j
        return total

    def derivative(self, var: str) -> "BiForm":
        """Partial derivative by one of x1, y1, x2, y2."""
        a, b = self.bidegree
        out = {}
        for (i, j), c in self.terms.items():
            if var == "x1" and a - i > 0:
                out[(i, j)] = c * (a - i)
            elif var == "y1" and i > 0:
                out[(i - 1, j)] = c * i
            elif var == "x2" and b - j > 0:
                out[(i, j)] = c * (b - j)
            elif var == "y2" and j > 0:
                out[(i, j - 1)] = c * j
        nb = {"x1": (a - 1, b), "y1": (a - 1, b), "x2": (a, b - 1), "y2": (a, b - 1)}[var]
        return BiForm(nb, out)

    def in_first(self, p1) -> BinForm:
        """Specialize (x1, y1) := p1, leaving a form in (x2, y2)."""
        a, b = self.bidegree
        u, v = p1
        c = [ZERO] * (b + 1)
        for (i, j), k in self.terms.items():
            c[j] = c[j] + k * u ** (a - i) * v ** i
        return BinForm(b, c)

    def as_quadratic_in_second(self):
        """Coefficients of x2^b-j y2^j as forms in (x1, y1)."""
        a, b = self.bidegree
        cols = [[ZERO] * (a + 1) for _ in range(b + 1)]
        for (i, j), c in self.terms.items():
            cols[j][i] = c
        return [BinForm(a, col) for col in cols]

    def swap_factors(self) -> "BiForm":
        a, b = self.bidegree
        return BiForm((b, a), {(j, i): c for (i, j), c in self.terms.items()})

    def __repr__(self):
        return f"BiForm({format_biform(self)!r})"

    def __str__(self):
        return format_biform(self)


def _power(name, e):
    if e == 0:
        return None
    return name if e == 1 else f"{name}^{e}"


def biform_monomial(a, b, i, j) -> str:
    parts = [_power("x1", a - i), _power("y1", i), _power("x2", b - j), _power("y2", j)]
    return "*".join(p for p in parts if p)


def format_biform(h: BiForm) -> str:
    a, b = h.bidegree
    return format_terms([(h.coeff(i, j), biform_monomial(a, b, i, j)) for i, j in h.keys_in_order()])


# -- M(w), standardness, Hessian -----------------------------------------------------

def matrix_of(w: NcPoly):
    """M(w)[i][j] = dright(dleft(w, x_i), x_j)."""
    if w.degree != 4:
        raise ValueError("matrix_of expects degree 4")
    return [[dright(dleft(w, a), b) for b in LETTERS] for a in LETTERS]


def reconstruct_from_matrix(m) -> NcPoly:
    gens = (X(), Y())
    out = NcPoly(4)
    for i in range(2):
        for j in range(2):
            out = out + gens[i] * m[i][j] * gens[j]
    return out


def relations(w: NcPoly):
    c = project_c(w)
    return dleft(c, "x"), dleft(c, "y")


def _solve_combination(target: NcPoly, basis):
    """Coefficients expressing target in span(basis), or None."""
    from .linalg import solve_in_span

    return solve_in_span([b.to_vector() for b in basis], target.to_vector())


def is_standard(w: NcPoly):
    """(standard?, Q_S) where g = Q_S f relates right and left partials of c(w)."""
    c = project_c(w)
    f = [dleft(c, t) for t in LETTERS]
    from .linalg import rank

    if rank([p.to_vector() for p in f]) < 2:
        return False, None
    g = [dright(c, t) for t in LETTERS]
    rows = []
    for gj in g:
        sol = _solve_combination(gj, f)
        if sol is None:
            return False, None
        rows.append(tuple(sol))
    return True, tuple(rows)


def segre(p: NcPoly) -> BiForm:
    if p.degree != 2:
        raise ValueError("segre expects degree 2")
    out = {}
    for word, c in p.terms.items():
        key = (1 if word[0] == "y" else 0, 1 if word[1] == "y" else 0)
        out[key] = out.get(key, 0) + c
    return BiForm((1, 1), out)


def segre_matrix(w: NcPoly):
    return [[segre(e) for e in row] for row in matrix_of(w)]


def hessian(w: NcPoly) -> BiForm:
    m = segre_matrix(w)
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


# -- the Calabi-Yau decision --------------------------------------------------------------

@dataclass
class CYVerdict:
    status: str  # CalabiYau, NotStandard, NonEmptyLocus
    witness: Optional[tuple] = None

    @property
    def is_cy(self) -> bool:
        return self.status == "CalabiYau"

    def __str__(self):
        if self.witness is None:
            return self.status
        p, q = self.witness
        return f"{self.status} at ({fmt_point(p)}, {fmt_point(q)})"


def fmt_point(p) -> str:
    return f"({format_scalar(p[0])}:{format_scalar(p[1])})"


def normalize_point(p):
    u, v = to_scalar(p[0]), to_scalar(p[1])
    if u != 0:
        return (Fraction(1), v / u)
    if v == 0:
        raise ValueError("(0, 0) is not a point of P^1")
    return (Fraction(0), Fraction(1))


def same_point(p, q) -> bool:
    return p[0] * q[1] == p[1] * q[0]


def _row_forms(forms):
    """For each bilinear form, the pair of linear forms in p giving its row p^T A."""
    rows = []
    for f in forms:
        # p^T A = (coefficient of x2, coefficient of y2), each linear in p
        rows.append((BinForm.linear(f.coeff(0, 0), f.coeff(1, 0)), BinForm.linear(f.coeff(0, 1), f.coeff(1, 1))))
    return rows


def locus_minors(forms):
    rows = _row_forms(forms)
    out = []
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            out.append(rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0])
    return out


def kernel_in_second(forms, p):
    """A common zero q of the forms at first coordinate p (None if only q = 0)."""
    rows = [f.in_first(p) for f in forms]
    for r in rows:
        if not r.is_zero():
            u, v = r.coeffs
            q = (-v, u)
            if all(s(*q) == 0 for s in rows):
                return normalize_point(q)
            return None
    return (Fraction(1), Fraction(0))


def common_zero(forms, tower=None):
    """A common zero of bidegree-(1, 1) forms on P^1 x P^1, or None."""
    minors = locus_minors(forms)
    nonzero = [m for m in minors if not m.is_zero()]
    if not nonzero:
        p = (Fraction(1), Fraction(0))
        return p, kernel_in_second(forms, p)
    g = nonzero[0]
    for m in nonzero[1:]:
        g = gcd(g, m)
    if g.degree == 0:
        return None
    _, pts, _ = binform_roots(g, tower)
    for p, _ in pts:
        q = kernel_in_second(forms, p)
        if q is not None:
            return normalize_point(p), q
    # roots beyond reach still prove non-emptiness
    return ("unreachable", "unreachable")


def cy_check(w: NcPoly) -> CYVerdict:
    c = project_c(w)
    standard, _ = is_standard(c)
    if not standard:
        return CYVerdict("NotStandard")
    forms = [f for row in segre_matrix(c) for f in row]
    hit = common_zero(forms)
    if hit is None:
        return CYVerdict("CalabiYau")
    if hit[0] == "unreachable":
        return CYVerdict("NonEmptyLocus")
    return CYVerdict("NonEmptyLocus", hit)


class WholeSurface:
    """Marker for E = P^1 x P^1."""

    def __repr__(self):
        return "WholeSurface"

    __str__ = __repr__


WHOLE_SURFACE = WholeSurface()


def point_scheme(w: NcPoly):
    if not cy_check(w).is_cy:
        raise PreconditionViolated("point_scheme needs a Calabi-Yau potential")
    h = hessian(project_c(w))
    if h.is_zero():
        return WHOLE_SURFACE
    return h.normalized()


def on_point_scheme(w: NcPoly, pt) -> bool:
    h = hessian(project_c(w))
    return h(*pt) == 0


def tau_of_point(w: NcPoly, pt):
    """tau(p1, p2) = (p2, p3) with p3 the kernel of M(p1, p2)."""
    if not cy_check(w).is_cy:
        raise PreconditionViolated("tau needs a Calabi-Yau potential")
    p1, p2 = (tuple(to_scalar(v) for v in p) for p in pt)
    m = segre_matrix(project_c(w))
    n = [[m[i][j](p1, p2) for j in range(2)] for i in range(2)]
    if n[0][0] * n[1][1] - n[0][1] * n[1][0] != 0:
        raise NotOnE("point is not on the point scheme")
    for row in n:
        if row[0] != 0 or row[1] != 0:
            return normalize_point(p2), normalize_point((-row[1], row[0]))
    raise AmbiguousThirdPoint("every third point solves the relations here")
