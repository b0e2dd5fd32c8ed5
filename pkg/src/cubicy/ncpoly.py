"""Homogeneous noncommutative polynomials in x, y.

Words are strings over ``"xy"``; within a fixed degree plain string order is
the degree-lexicographic order with x < y.  An :class:`NcPoly` maps words of
one fixed degree to nonzero exact scalars.

:class:`GL2` matrices act letterwise with the column convention
``sigma(x) = a*x + c*y`` and ``sigma(y) = b*x + d*y`` for ``[[a, b], [c, d]]``,
so ``apply_gl2(s @ t, w) == apply_gl2(s, apply_gl2(t, w))``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegreeMismatch
from .scalars import Scalar, format_scalar, is_rational, to_scalar

LETTERS = "xy"


def all_words(m: int) -> list[str]:
    return ["".join(p) for p in itertools.product(LETTERS, repeat=m)]


class NcPoly:
    """Element of the degree-``degree`` part of the free algebra k<x, y>."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        self.degree = degree
        clean = {}
        for word, c in (terms or {}).items():
            if len(word) != degree or any(ch not in LETTERS for ch in word):
                raise DegreeMismatch(f"word {word!r} does not have degree {degree}")
            if c != 0:
                clean[word] = to_scalar(c)
        self.terms = clean

    @classmethod
    def word(cls, word: str, coeff=1) -> "NcPoly":
        return cls(len(word), {word: coeff})

    @classmethod
    def zero(cls, degree: int) -> "NcPoly":
        return cls(degree)

    @classmethod
    def from_vector(cls, degree: int, vec: Sequence) -> "NcPoly":
        return cls(degree, dict(zip(all_words(degree), vec)))

    def to_vector(self) -> list:
        return [self.terms.get(w, Fraction(0)) for w in all_words(self.degree)]

    def coeff(self, word: str) -> Scalar:
        return self.terms.get(word, Fraction(0))

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "NcPoly"):
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NcPoly(self.degree, out)

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return NcPoly(self.degree, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            out: dict[str, Scalar] = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    out[u + v] = out.get(u + v, 0) + a * b
            return NcPoly(self.degree + other.degree, out)
        c = to_scalar(other)
        return NcPoly(self.degree, {w: a * c for w, a in self.terms.items()})

    def __rmul__(self, other):
        c = to_scalar(other)
        return NcPoly(self.degree, {w: c * a for w, a in self.terms.items()})

    def __truediv__(self, other):
        c = to_scalar(other)
        return NcPoly(self.degree, {w: a / c for w, a in self.terms.items()})

    def __pow__(self, k: int):
        out = NcPoly.word("")
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"NcPoly({format_ncpoly(self)!r})"

    def __str__(self):
        return format_ncpoly(self)


def X() -> NcPoly:
    return NcPoly.word("x")


def Y() -> NcPoly:
    return NcPoly.word("y")


def ncpoly(terms: dict) -> NcPoly:
    """Build a polynomial from ``{word: coeff}``; all words must share a length."""
    degrees = {len(w) for w in terms}
    if len(degrees) > 1:
        raise DegreeMismatch("words of different lengths")
    return NcPoly(degrees.pop() if degrees else 0, terms)


def _word_text(word: str) -> str:
    if not word:
        return "1"
    parts = []
    for letter, run in itertools.groupby(word):
        n = len(list(run))
        parts.append(letter if n == 1 else f"{letter}^{n}")
    return "*".join(parts)


def _coeff_prefix(c) -> tuple[str, str]:
    """Split a coefficient into a sign and a printable magnitude ('' for 1)."""
    if is_rational(c):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        return sign, "" if mag == 1 else format_scalar(mag)
    text = format_scalar(c)
    if " " in text:
        return "+", f"({text})"
    if text.startswith("-"):
        return "-", text[1:]
    return "+", text


def format_ncpoly(w: NcPoly) -> str:
    if w.is_zero():
        return "0"
    out = ""
    for word, c in w.items():
        sign, mag = _coeff_prefix(c)
        body = _word_text(word)
        if mag and word:
            term = f"{mag}*{body}"
        elif mag:
            term = mag
        else:
            term = body
        if not out:
            out = term if sign == "+" else "-" + term
        else:
            out += f" {sign} {term}"
    return out


# -- symmetric group actions ----------------------------------------------------

def permute(theta: Sequence[int], w: NcPoly) -> NcPoly:
    """theta(v_1...v_m) = v_theta(1) ... v_theta(m), with theta 1-based."""
    m = w.degree
    if len(theta) != m:
        raise DegreeMismatch(f"permutation of {len(theta)} letters applied in degree {m}")
    if sorted(theta) != list(range(1, m + 1)):
        raise ValueError(f"{theta!r} is not a permutation of 1..{m}")
    out = {}
    for word, c in w.terms.items():
        new = "".join(word[t - 1] for t in theta)
        out[new] = out.get(new, 0) + c
    return NcPoly(m, out)


def cycle(m: int) -> tuple[int, ...]:
    """The m-cycle phi: phi(v_1 ... v_m) = v_m v_1 ... v_{m-1}."""
    return (m,) + tuple(range(1, m))


def cyclic_shift(w: NcPoly) -> NcPoly:
    out = {}
    for word, c in w.terms.items():
        new = word[-1:] + word[:-1]
        out[new] = c
    return NcPoly(w.degree, out)


def project_c(w: NcPoly) -> NcPoly:
    """Cyclic average (1/m) sum_i phi^i(w)."""
    m = w.degree
    if m == 0:
        return w
    out: dict[str, Scalar] = {}
    for word, c in w.terms.items():
        for i in range(m):
            new = word[m - i:] + word[:m - i]
            out[new] = out.get(new, 0) + c
    return NcPoly(m, out) / m


def project_s(w: NcPoly) -> NcPoly:
    """Average over all letter permutations.

    The orbit of a word under S_m is every word with the same letter counts,
    each hit equally often, so the average only depends on the y-count.
    """
    m = w.degree
    by_count: dict[int, Scalar] = {}
    for word, c in w.terms.items():
        k = word.count("y")
        by_count[k] = by_count.get(k, 0) + c
    out = {}
    for k, c in by_count.items():
        share = c / math.comb(m, k)
        for pos in itertools.combinations(range(m), k):
            word = "".join("y" if i in pos else "x" for i in range(m))
            out[word] = share
    return NcPoly(m, out)


def _sign(perm: Sequence[int]) -> int:
    sgn = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def project_a(w: NcPoly) -> NcPoly:
    """Signed average over S_m."""
    m = w.degree
    out = NcPoly(m)
    perms = list(itertools.permutations(range(1, m + 1)))
    for perm in perms:
        term = permute(perm, w)
        out = out + term if _sign(perm) > 0 else out - term
    return out / len(perms)


def is_superpotential(w: NcPoly) -> bool:
    return cyclic_shift(w) == w


# -- GL(2) -------------------------------------------------------------------------

class GL2:
    """Invertible 2x2 matrix [[a, b], [c, d]] acting by x -> a x + c y, y -> b x + d y."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (to_scalar(v) for v in (a, b, c, d))
        if self.det == 0:
            raise ValueError("matrix is not invertible")

    @classmethod
    def from_rows(cls, rows) -> "GL2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "GL2":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def image(self, letter: str) -> dict[str, Scalar]:
        if letter == "x":
            return {"x": self.a, "y": self.c}
        return {"x": self.b, "y": self.d}

    def __matmul__(self, other: "GL2") -> "GL2":
        return GL2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "GL2":
        det = self.det
        return GL2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def transpose(self) -> "GL2":
        return GL2(self.a, self.c, self.b, self.d)

    def __eq__(self, other):
        if not isinstance(other, GL2):
            return NotImplemented
        return self.rows() == other.rows()

    def __hash__(self):
        return hash(self.rows())

    def __repr__(self):
        r = [[format_scalar(v) for v in row] for row in self.rows()]
        return f"GL2([[{r[0][0]}, {r[0][1]}], [{r[1][0]}, {r[1][1]}]])"


def apply_gl2(sigma: GL2, w: NcPoly) -> NcPoly:
    """sigma^{tensor m}(w): substitute the letter images and expand."""
    img = {"x": sigma.image("x"), "y": sigma.image("y")}
    out: dict[str, Scalar] = {}
    for word, c in w.terms.items():
        partial = {"": c}
        for letter in word:
            nxt: dict[str, Scalar] = {}
            for pre, pc in partial.items():
                for l2, lc in img[letter].items():
                    if lc == 0:
                        continue
                    key = pre + l2
                    nxt[key] = nxt.get(key, 0) + pc * lc
            partial = nxt
        for key, v in partial.items():
            out[key] = out.get(key, 0) + v
    return NcPoly(w.degree, out)


# -- derivatives ---------------------------------------------------------------------

def dleft(w: NcPoly, letter: str) -> NcPoly:
    """Strip a leading ``letter``: the left partial derivative."""
    if w.degree < 1:
        raise DegreeMismatch("cannot differentiate a degree-0 polynomial")
    return NcPoly(w.degree - 1, {word[1:]: c for word, c in w.terms.items() if word[0] == letter})


def dright(w: NcPoly, letter: str) -> NcPoly:
    """Strip a trailing ``letter``: the right partial derivative."""
    if w.degree < 1:
        raise DegreeMismatch("cannot differentiate a degree-0 polynomial")
    return NcPoly(w.degree - 1, {word[:-1]: c for word, c in w.terms.items() if word[-1] == letter})


def reconstruct_identity_check(w: NcPoly) -> bool:
    left = X() * dleft(w, "x") + Y() * dleft(w, "y")
    right = dright(w, "x") * X() + dright(w, "y") * Y()
    return left == w and right == w


# -- the degree-4 superpotential basis ------------------------------------------------

def _sum_words(words: Iterable[str], coeffs=None) -> NcPoly:
    words = list(words)
    coeffs = coeffs or [1] * len(words)
    out = {}
    for w, c in zip(words, coeffs):
        out[w] = out.get(w, 0) + c
    return NcPoly(4, out)


W0 = _sum_words(["xyxy", "xyyx", "yxxy", "yxyx"], [1, -1, -1, 1])
W1 = _sum_words(["xxyy", "xyyx", "yyxx", "yxxy"])
W2 = _sum_words(["xyxy", "yxyx"])
W3 = _sum_words(["xxxy", "xxyx", "xyxx", "yxxx"])
W4 = _sum_words(["yyyx", "yyxy", "yxyy", "xyyy"])
W5 = _sum_words(["xxxx"])
W6 = _sum_words(["yyyy"])
BASIS = (W1, W2, W3, W4, W5, W6)
NAMED = {"w0": W0, "w1": W1, "w2": W2, "w3": W3, "w4": W4, "w5": W5, "w6": W6}

# one representative word per basis element; each word occurs in exactly one w_i
_BASIS_KEYS = ("xxyy", "xyxy", "xxxy", "yyyx", "xxxx", "yyyy")


def from_sp_coords(coords: Sequence) -> NcPoly:
    out = NcPoly(4)
    for c, wi in zip(coords, BASIS):
        if c != 0:
            out = out + wi * c
    return out


def sp_coords(w: NcPoly):
    """Coordinates in the basis w1..w6 of the superpotentials, or None if not cyclic."""
    if w.degree != 4 or not is_superpotential(w):
        return None
    return tuple(w.coeff(k) for k in _BASIS_KEYS)


def pi_projection(w: NcPoly) -> NcPoly:
    """Projection onto (Alt^2 V)^{(x)2}: antisymmetrize positions (1,2) and (3,4)."""
    if w.degree != 4:
        raise DegreeMismatch("pi is defined in degree 4")
    return mu(w) * W0


def mu(w: NcPoly) -> Scalar:
    """Coordinate of pi(w) against w0 = (xy - yx)(xy - yx).

    Each word ab cd contributes (1/4) * sgn(ab) * sgn(cd), where sgn(xy) = 1,
    sgn(yx) = -1 and repeated letters give 0.
    """
    if w.degree != 4:
        raise DegreeMismatch("mu is defined in degree 4")
    sgn = {"xy": 1, "yx": -1}
    total: Scalar = Fraction(0)
    for word, c in w.terms.items():
        s = sgn.get(word[:2], 0) * sgn.get(word[2:], 0)
        if s:
            total = total + c * s
    return total / 4


def in_sym4(w: NcPoly) -> bool:
    """Fixed by the transpositions (1 2), (2 3), (3 4), hence by all of S_4."""
    if w.degree != 4:
        raise DegreeMismatch("in_sym4 expects degree 4")
    return all(permute(t, w) == w for t in ((2, 1, 3, 4), (1, 3, 2, 4), (1, 2, 4, 3)))
