"""Exact scalars: rationals and towers of quadratic-radical extensions of Q.

Rationals are plain :class:`fractions.Fraction` values.  An element of a
tower ``Q(s_1)(s_2)...(s_d)`` with ``s_k**2 = r_k`` is a :class:`TowerElement`
holding ``2**d`` rational coordinates; bit ``k-1`` of a coordinate index marks
the presence of the generator ``s_k``.  Elements are always stored in the
shortest prefix tower that contains them, so equality is structural and a
tower element that happens to be rational collapses to a ``Fraction``.

Towers combine when one is a prefix of the other; anything else raises
:class:`IncompatibleTowers`.
"""

from __future__ import annotations

import contextlib
import math
from fractions import Fraction
from typing import Iterator, Union

from .errors import IncompatibleTowers, TowerDepthExceeded

__all__ = [
    "Scalar", "FieldTower", "TowerElement", "QQ",
    "to_scalar", "tower_of", "join_towers", "lift_coords", "adjoin_sqrt",
    "sqrt_in_tower", "is_rational", "conjugate_top", "format_scalar",
    "get_max_depth", "set_max_depth", "max_depth",
]

_MAX_DEPTH = 4


def get_max_depth() -> int:
    return _MAX_DEPTH


def set_max_depth(depth: int) -> None:
    global _MAX_DEPTH
    if depth < 0:
        raise ValueError("tower depth limit must be non-negative")
    _MAX_DEPTH = depth


@contextlib.contextmanager
def max_depth(depth: int) -> Iterator[None]:
    old = get_max_depth()
    set_max_depth(depth)
    try:
        yield
    finally:
        set_max_depth(old)


class FieldTower:
    """An ordered list of radicands; level k adjoins a square root of ``radicands[k-1]``.

    Each radicand lives in the prefix tower of the levels below it and is
    known not to be a square there.  Build towers with :func:`adjoin_sqrt`.
    """

    __slots__ = ("radicands", "_rad_coords", "_hash")

    def __init__(self, radicands=()):
        self.radicands = tuple(radicands)
        self._rad_coords = None
        self._hash = hash(self.radicands)

    @property
    def depth(self) -> int:
        return len(self.radicands)

    def prefix(self, depth: int) -> "FieldTower":
        if depth == self.depth:
            return self
        if depth == 0:
            return QQ
        return FieldTower(self.radicands[:depth])

    def is_prefix_of(self, other: "FieldTower") -> bool:
        return self is other or (
            self.depth <= other.depth and other.radicands[: self.depth] == self.radicands
        )

    def rad_coords(self):
        """Radicand of each level as a coordinate tuple over the level below."""
        if self._rad_coords is None:
            out = []
            for k, r in enumerate(self.radicands):
                out.append(lift_coords(r, k))
            self._rad_coords = tuple(out)
        return self._rad_coords

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldTower):
            return NotImplemented
        return self._hash == other._hash and self.radicands == other.radicands

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inner = ", ".join(format_scalar(r) for r in self.radicands)
        return f"FieldTower([{inner}])"


QQ = FieldTower()


# -- coordinate kernels -------------------------------------------------------
# A coordinate tuple at depth d has length 2**d; its first half is the part
# without the top generator and its second half multiplies the top generator.

def _c_add(a, b):
    return tuple(p + q for p, q in zip(a, b))


def _c_sub(a, b):
    return tuple(p - q for p, q in zip(a, b))


def _c_neg(a):
    return tuple(-p for p in a)


def _c_scale(a, c):
    return tuple(p * c for p in a)


def _c_is_zero(a):
    return not any(a)


def _c_mul(a, b, rads):
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n // 2
    a0, a1, b0, b1 = a[:h], a[h:], b[:h], b[h:]
    r = rads[h.bit_length() - 1]
    sub = rads
    lo = _c_add(_c_mul(a0, b0, sub), _c_mul(_c_mul(a1, b1, sub), r, sub))
    hi = _c_add(_c_mul(a0, b1, sub), _c_mul(a1, b0, sub))
    return lo + hi


def _c_inv(a, rads):
    n = len(a)
    if n == 1:
        if a[0] == 0:
            raise ZeroDivisionError("division by zero scalar")
        return (1 / a[0],)
    h = n // 2
    a0, a1 = a[:h], a[h:]
    r = rads[h.bit_length() - 1]
    norm = _c_sub(_c_mul(a0, a0, rads), _c_mul(_c_mul(a1, a1, rads), r, rads))
    ninv = _c_inv(norm, rads)
    return _c_mul(a0, ninv, rads) + _c_neg(_c_mul(a1, ninv, rads))


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _c_sqrt(a, rads):
    """Square root of a coordinate tuple inside its own tower, or None."""
    n = len(a)
    if n == 1:
        s = _rational_sqrt(a[0])
        return None if s is None else (s,)
    h = n // 2
    a0, a1 = a[:h], a[h:]
    r = rads[h.bit_length() - 1]
    zero = (Fraction(0),) * h
    if _c_is_zero(a1):
        s = _c_sqrt(a0, rads)
        if s is not None:
            return s + zero
        t = _c_sqrt(_c_mul(a0, _c_inv(r, rads), rads), rads)
        if t is not None:
            return zero + t
        return None
    norm = _c_sub(_c_mul(a0, a0, rads), _c_mul(_c_mul(a1, a1, rads), r, rads))
    m = _c_sqrt(norm, rads)
    if m is None:
        return None
    half = Fraction(1, 2)
    for sgn in (m, _c_neg(m)):
        p2 = _c_scale(_c_add(a0, sgn), half)
        if _c_is_zero(p2):
            continue
        p = _c_sqrt(p2, rads)
        if p is None:
            continue
        q = _c_mul(_c_scale(a1, half), _c_inv(p, rads), rads)
        cand = p + q
        if _c_mul(cand, cand, rads) == tuple(a):
            return cand
    return None


# -- element type ---------------------------------------------------------------

class TowerElement:
    """An irrational element of a quadratic-radical tower."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower: FieldTower, coords):
        self.tower = tower
        self.coords = tuple(coords)

    # construction helpers
    @staticmethod
    def make(tower: FieldTower, coords) -> "Scalar":
        coords = tuple(coords)
        d = tower.depth
        while d > 0:
            h = 1 << (d - 1)
            if any(coords[h:]):
                break
            coords = coords[:h]
            d -= 1
        if d == 0:
            return coords[0]
        return TowerElement(tower.prefix(d), coords)

    def _binary(self, other, op):
        if isinstance(other, TowerElement):
            tower = join_towers(self.tower, other.tower)
            a = lift_coords(self, tower.depth, tower)
            b = lift_coords(other, tower.depth, tower)
        elif isinstance(other, (int, Fraction)):
            tower = self.tower
            a = self.coords
            b = lift_coords(Fraction(other), tower.depth)
        else:
            return NotImplemented
        return op(a, b, tower)

    def __add__(self, other):
        return self._binary(other, lambda a, b, t: TowerElement.make(t, _c_add(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b, t: TowerElement.make(t, _c_sub(a, b)))

    def __rsub__(self, other):
        return self._binary(other, lambda a, b, t: TowerElement.make(t, _c_sub(b, a)))

    def __mul__(self, other):
        return self._binary(
            other, lambda a, b, t: TowerElement.make(t, _c_mul(a, b, t.rad_coords()))
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        def div(a, b, t):
            rads = t.rad_coords()
            return TowerElement.make(t, _c_mul(a, _c_inv(b, rads), rads))
        return self._binary(other, div)

    def __rtruediv__(self, other):
        def div(a, b, t):
            rads = t.rad_coords()
            return TowerElement.make(t, _c_mul(b, _c_inv(a, rads), rads))
        return self._binary(other, div)

    def __neg__(self):
        return TowerElement(self.tower, _c_neg(self.coords))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return True

    def __eq__(self, other):
        if isinstance(other, TowerElement):
            if self.tower == other.tower:
                return self.coords == other.coords
            join_towers(self.tower, other.tower)
            return False
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.tower, self.coords))

    def __repr__(self):
        return f"TowerElement({format_scalar(self)})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, TowerElement]


def to_scalar(x) -> Scalar:
    if isinstance(x, TowerElement):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        from .parse import parse_scalar
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def is_rational(x) -> bool:
    return not isinstance(x, TowerElement)


def tower_of(*xs) -> FieldTower:
    """Smallest tower (in prefix order) containing all the given scalars."""
    t = QQ
    for x in xs:
        if isinstance(x, TowerElement):
            t = join_towers(t, x.tower)
    return t


def join_towers(*towers: FieldTower) -> FieldTower:
    best = QQ
    for t in towers:
        if best.is_prefix_of(t):
            best = t
        elif not t.is_prefix_of(best):
            raise IncompatibleTowers(f"{best!r} and {t!r} do not embed in each other")
    return best


def lift_coords(x, depth: int, tower: FieldTower | None = None):
    """Coordinates of ``x`` in a tower of the given depth that contains it."""
    if isinstance(x, TowerElement):
        if tower is not None and not x.tower.is_prefix_of(tower):
            raise IncompatibleTowers(f"{x.tower!r} does not embed in {tower!r}")
        c = x.coords
    else:
        c = (Fraction(x),)
    n = 1 << depth
    if len(c) > n:
        raise IncompatibleTowers("scalar lives in a deeper tower")
    return c + (Fraction(0),) * (n - len(c))


def sqrt_in_tower(r, tower: FieldTower | None = None):
    """A square root of ``r`` inside ``tower`` (default: the tower of ``r``), else None."""
    r = to_scalar(r)
    t = join_towers(tower_of(r), tower or QQ)
    a = lift_coords(r, t.depth, t)
    s = _c_sqrt(a, t.rad_coords())
    if s is None:
        return None
    return TowerElement.make(t, s)


def adjoin_sqrt(tower: FieldTower, r, max_depth: int | None = None):
    """Return ``(tower', root)`` with ``root**2 == r`` and ``root`` in ``tower'``.

    When ``r`` is already a square in ``tower`` the tower comes back unchanged
    together with the witness root.
    """
    r = to_scalar(r)
    tower = join_towers(tower, tower_of(r))
    if r == 0:
        raise ValueError("cannot adjoin the square root of zero")
    s = sqrt_in_tower(r, tower)
    if s is not None:
        return tower, s
    limit = get_max_depth() if max_depth is None else max_depth
    if tower.depth >= limit:
        raise TowerDepthExceeded(
            f"adjoining sqrt({format_scalar(r)}) would exceed tower depth {limit}"
        )
    scale = Fraction(1)
    if is_rational(r):
        scale, r = _squarefree_split(r)
    new = FieldTower(tower.radicands + (r,))
    d = tower.depth
    coords = [Fraction(0)] * (1 << (d + 1))
    coords[1 << d] = scale
    return new, TowerElement(new, coords)


def _squarefree_split(q: Fraction):
    """Write q = k**2 * d with d a squarefree integer; return (k, d)."""
    from sympy import factorint

    n = q.numerator * q.denominator
    k, d = 1, 1 if n > 0 else -1
    for prime, e in factorint(abs(n)).items():
        k *= prime ** (e // 2)
        if e % 2:
            d *= prime
    return Fraction(k, q.denominator), Fraction(d)


def conjugate_top(x, tower: FieldTower):
    """Image of ``x`` under the automorphism negating the top generator of ``tower``."""
    if tower.depth == 0:
        return x
    c = lift_coords(x, tower.depth, tower)
    h = len(c) // 2
    return TowerElement.make(tower, c[:h] + _c_neg(c[h:]))


# -- printing -------------------------------------------------------------------

def _fmt_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Render in the parser's scalar syntax, e.g. ``1/2 + 3*sqrt(-3)``."""
    if not isinstance(x, TowerElement):
        return _fmt_rational(Fraction(x))
    roots = [f"sqrt({format_scalar(r)})" for r in x.tower.radicands]
    parts = []
    for idx, c in enumerate(x.coords):
        if c == 0:
            continue
        gens = [roots[k] for k in range(len(roots)) if idx >> k & 1]
        mono = "*".join(gens)
        if not mono:
            parts.append(_fmt_rational(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{_fmt_rational(c)}*{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
