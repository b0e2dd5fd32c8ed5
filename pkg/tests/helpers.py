"""Shared data and independent oracles for the test suite."""

from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from cubicy.comm import BinForm
from cubicy.curves import factor_22
from cubicy.cy import BiForm, point_scheme, tau_of_point
from cubicy.ncpoly import GL2, NcPoly, all_words, from_sp_coords
from cubicy.parse import parse_potential

X1, Y1, X2, Y2 = sympy.symbols("x1 y1 x2 y2")

# Row id -> displayed potential, relations column, H column, curve tag, tau action.
TABLE = {
    "1": ("w1 - 2*w2",
          ("x*y^2 + y^2*x - 2*y*x*y", "y*x^2 + x^2*y - 2*x*y*x"),
          "(x1*y2 - y1*x2)**2", "Double11", None),
    "2": ("w1 - 2*w2 - 2*w5",
          ("x*y^2 + y^2*x - 2*y*x*y - 2*x^3", "y*x^2 + x^2*y - 2*x*y*x"),
          "(x1*y2 - y1*x2 - x1*x2)*(x1*y2 - y1*x2 + x1*x2)", "Two11Meet1", "stabilizes"),
    "3": ("w1 - 2*w2 + w3",
          ("x*y^2 + y^2*x - 2*y*x*y + x^2*y + x*y*x + y*x^2", "y*x^2 + x^2*y - 2*x*y*x + x^3"),
          "2*(x1*y2 - y1*x2)**2 + 2*(y1*x2 + x1*y2)*x1*x2 - x1**2*x2**2", "IrreducibleCusp", None),
    "4.1": ("w1", ("x*y^2 + y^2*x", "y*x^2 + x^2*y"), "0", "WholeSurface", None),
    "4.2": ("w1 + 2*w2",
            ("x*y^2 + y^2*x + 2*y*x*y", "y*x^2 + x^2*y + 2*x*y*x"),
            "(x1*y2 + y1*x2)**2", "Double11", None),
    "4.3": ("w1 + w2",
            ("x*y^2 + y^2*x + y*x*y", "y*x^2 + x^2*y + x*y*x"),
            "x1**2*y2**2 + y1**2*x2**2 + x1*y1*x2*y2", "Two11Meet2", "stabilizes"),
    "5.1": ("w1 + 4*w5", ("x*y^2 + y^2*x + 4*x^3", "y*x^2 + x^2*y"),
            "x1**2*x2**2", "DoubleRulingPair", "interchanges"),
    "5.2": ("w1 + 2*w2 + 8*w5",
            ("x*y^2 + y^2*x + 2*y*x*y + 8*x^3", "y*x^2 + x^2*y + 2*x*y*x"),
            "(x1*y2 + y1*x2 - 2*x1*x2)*(x1*y2 + y1*x2 + 2*x1*x2)", "Two11Meet1", "interchanges"),
    "5.3": ("w1 + w2 + w5",
            ("x*y^2 + y^2*x + y*x*y + x^3", "y*x^2 + x^2*y + x*y*x"),
            "x1**2*y2**2 + y1**2*x2**2 + x1*y1*x2*y2 - x1**2*x2**2", "IrreducibleBiflecnode", None),
    "6.1": ("2*w2 + w5 + w6", ("2*y*x*y + x^3", "2*x*y*x + y^3"),
            "x1*y1*x2*y2", "FourRulings", "circulates"),
    "6.2": ("w1 + w5 + w6", ("x*y^2 + y^2*x + x^3", "y*x^2 + x^2*y + y^3"),
            "x1**2*x2**2 + y1**2*y2**2 + x1*y1*x2*y2", "Two11Meet2", "interchanges"),
    "6.3": ("w1 + 3*w2 + w5 + w6",
            ("x*y^2 + y^2*x + 3*y*x*y + x^3", "y*x^2 + x^2*y + 3*x*y*x + y^3"),
            "3*x1**2*y2**2 + 3*y1**2*x2**2 + 8*x1*y1*x2*y2 - x1**2*x2**2 - y1**2*y2**2",
            "Smooth22", None),
}

# An admissible point of the last row: alpha = 1, beta = 2.
ROW_63_ADMISSIBLE = ("w1 + 2*w2 + w5 + w6",
                     ("x*y^2 + y^2*x + 2*y*x*y + x^3", "y*x^2 + x^2*y + 2*x*y*x + y^3"),
                     "2*x1**2*y2**2 + 2*y1**2*x2**2 + 3*x1*y1*x2*y2 - x1**2*x2**2 - y1**2*y2**2",
                     "Smooth22", None)

CY_ROWS = [r for r in TABLE if r != "6.3"] + ["6.3*"]


def row_data(row: str):
    return ROW_63_ADMISSIBLE if row == "6.3*" else TABLE[row]


def row_potential(row: str) -> NcPoly:
    return parse_potential(row_data(row)[0])


# Boundary potentials of the five non-Calabi-Yau algebras.
EXCEPTIONAL = {
    "E1": ["w5"],
    "E2": ["w3"],
    "E3": ["w2"],
    "E4": ["1/2*w2 + w5"],
    "E5": ["w5 + w6", "w1 + w2 + w5 + w6", "-w1 - w2 + w5 + w6"],
}


def biform_from_text(text: str, bidegree=(2, 2)) -> BiForm:
    """Independent route from a printed polynomial in x1, y1, x2, y2 to a BiForm."""
    expr = sympy.expand(sympy.sympify(text))
    a, b = bidegree
    terms = {}
    if expr != 0:
        for (e1, f1, e2, f2), c in sympy.Poly(expr, X1, Y1, X2, Y2).terms():
            assert e1 + f1 == a and e2 + f2 == b
            terms[(f1, f2)] = Fraction(int(c.p), int(c.q))
    return BiForm(bidegree, terms)


def to_sympy(f: BiForm):
    a, b = f.bidegree
    return sum(
        sympy.Rational(c.numerator, c.denominator) * X1 ** (a - i) * Y1 ** i * X2 ** (b - j) * Y2 ** j
        for (i, j), c in f.terms.items()
    )


def groebner_empty(forms) -> bool:
    """Emptiness of the common zero set on P^1 x P^1, chart by chart."""
    polys = [to_sympy(f) for f in forms]
    polys = [p for p in polys if p != 0]
    if not polys:
        return False
    s, t = sympy.symbols("s t")
    charts = [{X1: 1, Y1: s}, {X1: 0, Y1: 1}]
    charts2 = [{X2: 1, Y2: t}, {X2: 0, Y2: 1}]
    for c1 in charts:
        for c2 in charts2:
            eqs = [sympy.expand(p.subs(c1).subs(c2)) for p in polys]
            eqs = [e for e in eqs if e != 0]
            if not eqs:
                return False
            gb = sympy.groebner(eqs, s, t, order="lex")
            if list(gb.exprs) != [1]:
                return False
    return True


def random_gl2(rng, lo=-3, hi=3) -> GL2:
    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c != 0:
            return GL2(a, b, c, d)


# -- hypothesis strategies ---------------------------------------------------------------

small = st.integers(-3, 3).map(Fraction)
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def ncpolys(draw, degree=4):
    vec = [draw(small) for _ in all_words(degree)]
    return NcPoly.from_vector(degree, vec)


@st.composite
def superpotentials(draw):
    return from_sp_coords([draw(small) for _ in range(6)])


def gl2s():
    entry = st.sampled_from([1, -1, 2, 0, -2, 3, -3])
    return (st.tuples(entry, entry, entry, entry)
            .filter(lambda t: t[0] * t[3] != t[1] * t[2])
            .map(lambda t: GL2(*t)))


@st.composite
def binforms(draw, degree=4):
    return BinForm(degree, [draw(rationals) for _ in range(degree + 1)])


@st.composite
def factored_quartics(draw):
    """Quartics built from small linear and quadratic factors, so their roots are reachable."""
    coef = st.integers(-3, 3)
    pattern = draw(st.sampled_from([(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,), (1, 1, 2), (2, "q"), (1, 1, "q"), ("q", "q")]))
    out = BinForm(0, [draw(st.integers(1, 3))])
    for part in pattern:
        if part == "q":
            q = BinForm(2, [draw(coef) for _ in range(3)])
            if q.is_zero():
                q = BinForm(2, [1, 0, 1])
            out = out * q
            continue
        u, v = draw(coef), draw(coef)
        if u == 0 and v == 0:
            u = 1
        lin = BinForm.linear(u, v)
        out = out * lin ** part if isinstance(part, int) and part > 1 else out * lin
    return out


# -- tau on the components of the point scheme ------------------------------------------

def _component_points(comp):
    a, b = comp.bidegree
    pts = []
    for t in (2, 3):
        if (a, b) == (1, 0):
            u, v = comp.coeff(0, 0), comp.coeff(1, 0)
            pts.append(((-v, u), (Fraction(1), Fraction(t))))
        elif (a, b) == (0, 1):
            u, v = comp.coeff(0, 0), comp.coeff(0, 1)
            pts.append(((Fraction(1), Fraction(t)), (-v, u)))
        else:
            p = (Fraction(1), Fraction(t))
            g = comp.in_first(p)
            u, v = g.coeffs
            pts.append((p, (-v, u)))
    return pts


def tau_permutation(w):
    """Where tau sends each component of the point scheme."""
    comps = [c for c, _ in factor_22(point_scheme(w)).components]
    perm = []
    for c in comps:
        targets = set()
        for pt in _component_points(c):
            img = tau_of_point(w, pt)
            targets.add(tuple(k for k, d in enumerate(comps) if d(*img) == 0))
        assert len(targets) == 1
        (hit,) = targets
        assert len(hit) == 1
        perm.append(hit[0])
    return perm


def tau_kind(perm) -> str:
    n = len(perm)
    if perm == list(range(n)):
        return "stabilizes"
    if n == 2 and perm == [1, 0]:
        return "interchanges"
    seen, k = set(), 0
    for _ in range(n):
        seen.add(k)
        k = perm[k]
    return "circulates" if len(seen) == n and k == 0 else "other"
