"""Brute-force linear algebra on graded pieces of k<x,y>/(R).

Slow and simple on purpose: the other modules are cross-checked against it.
Words of length n are indexed by reading x as 0 and y as 1 in binary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from . import roots as P
from .linalg import Echelon
from .ncpoly import NcPoly, all_words
from .scalars import tower_of


def word_index(word: str) -> int:
    n = 0
    for ch in word:
        n = (n << 1) | (ch == "y")
    return n


def index_word(idx: int, n: int) -> str:
    return "".join("y" if (idx >> (n - 1 - k)) & 1 else "x" for k in range(n))


def _sparse(p: NcPoly) -> dict:
    return {word_index(w): c for w, c in p.items()}


class IdealSlices:
    """Graded pieces I_n of the two-sided ideal generated by cubic relations.

    Uses I_n = x I_{n-1} + y I_{n-1} + R V^{n-3}, built lazily.
    """

    def __init__(self, rels: Sequence[NcPoly]):
        rels = [r for r in rels if not r.is_zero()]
        for r in rels:
            if r.degree != 3:
                raise ValueError("relations must be cubic")
        self.rels = [_sparse(r) for r in rels]
        self.slices: dict[int, Echelon] = {}

    def slice(self, n: int) -> Echelon:
        if n in self.slices:
            return self.slices[n]
        e = Echelon()
        if n >= 3:
            if n > 3:
                prev = self.slice(n - 1)
                for letter in (0, 1):
                    shift = letter << (n - 1)
                    for row in prev.rows.values():
                        e.add({shift | k: v for k, v in row.items()})
            tail = n - 3
            for r in self.rels:
                for v in range(1 << tail):
                    e.add({(k << tail) | v: c for k, c in r.items()})
        self.slices[n] = e
        return e

    def dim(self, n: int) -> int:
        return len(self.slice(n))

    def contains(self, p: NcPoly) -> bool:
        if p.is_zero():
            return True
        return self.slice(p.degree).contains(_sparse(p))


def graded_dims(rels: Sequence[NcPoly], n_max: int) -> list[int]:
    """dim A_n for n = 0..n_max, where A = k<x,y>/(rels)."""
    ideal = IdealSlices(rels)
    return [(1 << n) - ideal.dim(n) for n in range(n_max + 1)]


def ideal_member(u: NcPoly, rels: Sequence[NcPoly]) -> bool:
    return IdealSlices(rels).contains(u)


def reference_series(n_max: int) -> list[int]:
    """Coefficients of 1/((1-t)^2 (1-t^2)) by repeated series division."""
    coeffs = [1] + [0] * n_max
    for den in ([1, -1], [1, -1], [1, 0, -1]):
        out = []
        for n in range(n_max + 1):
            s = coeffs[n] - sum(den[k] * out[n - k] for k in range(1, len(den)) if n - k >= 0)
            out.append(s)
        coeffs = out
    return coeffs


def nilpotent_directions(rels: Sequence[NcPoly], tower=None) -> list[tuple]:
    """Points (u, v) of P^1 with (u x + v y)^3 in span(rels).

    Returns an empty list when no such direction exists; every direction is
    returned only when all of P^1 qualifies.
    """
    span = Echelon()
    for r in rels:
        if not r.is_zero():
            span.add(_sparse(r))
    # (x + t y)^3 = sum_k t^k S_k with S_k the words having k letters y
    reduced = []
    for k in range(4):
        s = {word_index(w): Fraction(1) for w in all_words(3) if w.count("y") == k}
        reduced.append(span.reduce(s))
    positions = sorted(set().union(*reduced))
    conds = [[red.get(pos, Fraction(0)) for red in reduced] for pos in positions]
    g = []
    for c in conds:
        c = P.trim(c)
        if c:
            g = c if not g else P.pgcd(g, c)
    out = []
    if not g:
        return [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    if P.degree(g) > 0:
        t = tower_of(*g) if tower is None else tower
        _, found, _ = P.find_roots(g, t)
        out = [(Fraction(1), r) for r, _ in found]
    if span.contains({word_index("yyy"): Fraction(1)}):
        out.append((Fraction(0), Fraction(1)))
    return out


def nilpotent_linear_form(rels: Sequence[NcPoly]) -> Optional[NcPoly]:
    """A nonzero degree-1 element whose cube vanishes in the quotient, or None."""
    dirs = nilpotent_directions(rels)
    if not dirs:
        return None
    u, v = dirs[0]
    return NcPoly(1, {"x": u, "y": v})


def zero_divisor_witness(a: NcPoly, b: NcPoly, rels: Sequence[NcPoly]) -> bool:
    """True when a and b are nonzero in the quotient but a*b is zero."""
    ideal = IdealSlices(rels)
    return not ideal.contains(a) and not ideal.contains(b) and ideal.contains(a * b)
