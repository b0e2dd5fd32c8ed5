"""Univariate polynomials over exact scalars and root finding in quadratic towers.

Polynomials are lists of coefficients, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).

Root finding is best effort by construction: linear and quadratic factors
always resolve (adjoining one square root when needed), quartics go through
Ferrari's resolvent, and anything whose roots need a non-quadratic-radical
extension is handed back as an unresolved residual factor.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CubicyError, TowerDepthExceeded
from .scalars import (
    QQ, FieldTower, adjoin_sqrt, conjugate_top, is_rational, join_towers, tower_of,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(p) - 1


def padd(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)])


def psub(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else ZERO) - (q[i] if i < len(q) else ZERO) for i in range(n)])


def pscale(p, c):
    return trim([a * c for a in p])


def pmul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def pdivmod(p, q):
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = trim(p)
    lead = q[-1]
    quot = [ZERO] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] = rem[shift + i] - c * b
        rem.pop()
        rem = trim(rem)
    return trim(quot), rem


def monic(p):
    p = trim(p)
    if not p:
        return p
    lead = p[-1]
    return [a / lead for a in p]


def pgcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, pdivmod(p, q)[1]
    return monic(p)


def deriv(p):
    return trim([i * a for i, a in enumerate(p)][1:])


def peval(p, x):
    acc = ZERO
    for a in reversed(p):
        acc = acc * x + a
    return acc


def squarefree_decomposition(p):
    """Yun's algorithm: list of (squarefree factor, multiplicity)."""
    p = monic(p)
    if degree(p) < 1:
        return []
    out = []
    a = p
    b = deriv(a)
    c = pgcd(a, b)
    w = pdivmod(a, c)[0]
    i = 1
    while degree(w) > 0:
        y = pgcd(w, c)
        z = pdivmod(w, y)[0]
        if degree(z) > 0:
            out.append((monic(z), i))
        i += 1
        w = y
        c = pdivmod(c, y)[0]
    return out


def _factor_rational(p):
    """Irreducible monic factors over Q of a squarefree rational polynomial."""
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(p))
    _, factors = sympy.Poly(expr, t, domain="QQ").factor_list()
    out = []
    for fac, _mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append(monic(coeffs))
    return out


def norm_to_rationals(p, tower: FieldTower):
    """Product of the conjugates of ``p`` down to a polynomial over Q."""
    t = tower
    while t.depth > 0:
        conj = [conjugate_top(c, t) for c in p]
        p = pmul(p, conj)
        t = t.prefix(t.depth - 1)
    return [c for c in p]


def _quadratic_roots(p, tower):
    c0, c1, c2 = p
    disc = c1 * c1 - 4 * c2 * c0
    if disc == 0:
        r = -c1 / (2 * c2)
        return tower, [r, r]
    tower, s = adjoin_sqrt(tower, disc)
    return tower, [(-c1 + s) / (2 * c2), (-c1 - s) / (2 * c2)]


def _ferrari(p, tower):
    """Roots of a squarefree monic quartic via the resolvent cubic, or None."""
    d, c, b, a, _ = p
    shift = a / 4
    # depressed quartic u^4 + P u^2 + Q u + R with t = u - a/4
    P = b - 3 * a * a / 8
    Q = c - a * b / 2 + a ** 3 / 8
    R = d - a * c / 4 + a * a * b / 16 - 3 * a ** 4 / 256
    if Q == 0:
        tower, zs = _quadratic_roots([R, P, ONE], tower)
        out = []
        for z in zs:
            if z == 0:
                out.append(ZERO)
                continue
            tower, s = adjoin_sqrt(tower, z)
            out.extend([s, -s])
        return tower, [u - shift for u in out]
    cubic = trim([4 * P * R - Q * Q, -8 * R, -4 * P, Fraction(8)])
    tower, ms, _res = find_roots(cubic, tower)
    m = next((m for m, _ in ms if 2 * m - P != 0), None)
    if m is None:
        return None
    tower, s = adjoin_sqrt(tower, 2 * m - P)
    k = Q / (2 * s)
    tower, r1 = _quadratic_roots([m + k, -s, ONE], tower)
    tower, r2 = _quadratic_roots([m - k, s, ONE], tower)
    return tower, [u - shift for u in r1 + r2]


def _roots_squarefree(p, tower):
    """Return (tower, roots, residual) for a monic squarefree polynomial."""
    n = degree(p)
    if n <= 0:
        return tower, [], [ONE]
    if n == 1:
        return tower, [-p[0]], [ONE]
    if n == 2:
        try:
            tower, rs = _quadratic_roots(p, tower)
            return tower, rs, [ONE]
        except TowerDepthExceeded:
            return tower, [], p
    if all(is_rational(c) for c in p):
        factors = _factor_rational(p)
        if len(factors) == 1:
            if n == 4:
                try:
                    res = _ferrari(p, tower)
                except TowerDepthExceeded:
                    res = None
                if res is not None:
                    return res[0], res[1], [ONE]
            return tower, [], p
        roots, residual = [], [ONE]
        for f in factors:
            tower, rs, res = _roots_squarefree(f, tower)
            roots.extend(rs)
            residual = pmul(residual, res)
        return tower, roots, residual
    # coefficients in a proper tower: harvest candidate roots from the norm
    base = join_towers(tower, tower_of(*p))
    roots = []
    rest = p
    for f in _factor_rational(monic(norm_to_rationals(p, base))):
        if degree(f) > 4 or degree(rest) <= 0:
            continue
        try:
            trial, cands, _ = _roots_squarefree(f, tower)
        except TowerDepthExceeded:
            continue
        for r in cands:
            if degree(rest) > 0 and peval(rest, r) == 0:
                tower = trial
                roots.append(r)
                rest = pdivmod(rest, [-r, ONE])[0]
    if degree(rest) == 2:
        try:
            tower, rs = _quadratic_roots(rest, tower)
            return tower, roots + rs, [ONE]
        except TowerDepthExceeded:
            pass
    if degree(rest) == 4:
        try:
            res = _ferrari(rest, tower)
        except TowerDepthExceeded:
            res = None
        if res is not None:
            return res[0], roots + res[1], [ONE]
    return tower, roots, rest if degree(rest) > 0 else [ONE]


def find_roots(p, tower: FieldTower | None = None):
    """Roots of ``p`` reachable by quadratic-radical extensions.

    Returns ``(tower, [(root, multiplicity), ...], residual)`` where ``tower``
    contains every root reported and ``residual`` is the monic product of the
    factors whose roots could not be reached (``[1]`` when none).
    """
    p = trim(p)
    if not p:
        raise ValueError("the zero polynomial has every scalar as a root")
    tower = join_towers(tower or QQ, tower_of(*p))
    found = []
    residual = [ONE]
    for fac, mult in squarefree_decomposition(p):
        try:
            tower, rs, res = _roots_squarefree(fac, tower)
        except CubicyError:
            rs, res = [], fac
        found.extend((r, mult) for r in rs)
        for _ in range(mult):
            residual = pmul(residual, res)
    return tower, found, residual
