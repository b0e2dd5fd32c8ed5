"""Text syntax for scalars, noncommutative polynomials, matrices and points.

Scalars: integers, ``/``, ``sqrt(...)`` and parentheses, e.g. ``1/2 + sqrt(-3)``.
Polynomials add words in ``x`` and ``y``: juxtaposition or ``*`` concatenates,
``^`` repeats, and ``w0`` ... ``w6`` name the standard degree-4 elements.
One parser instance shares a single tower, so every ``sqrt`` it meets lands in
a common field.
"""

from __future__ import annotations

import re
from typing import Optional

from .errors import CubicyError, NonHomogeneous, ParseError
from .ncpoly import GL2, NAMED, NcPoly
from .scalars import QQ, FieldTower, adjoin_sqrt, join_towers, tower_of

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<sqrt>sqrt)|(?P<name>w\d)|(?P<letter>[xy])|(?P<op>[-+*/^()]))"
)


class _Parser:
    def __init__(self, text: str, tower: Optional[FieldTower] = None):
        self.text = text
        self.tower = tower or QQ
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                pos += len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}", pos)

    def parse(self) -> NcPoly:
        val = self.expr()
        kind, v, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected {v!r}", pos)
        return val

    def _add(self, a: NcPoly, b: NcPoly, pos: int) -> NcPoly:
        if a.degree != b.degree:
            raise NonHomogeneous(f"terms of degrees {a.degree} and {b.degree} are added", pos)
        return a + b

    def expr(self) -> NcPoly:
        sign = 1
        kind, v, pos = self.peek()
        if v in ("+", "-"):
            self.take()
            sign = -1 if v == "-" else 1
        val = self.term()
        if sign < 0:
            val = -val
        while self.peek()[1] in ("+", "-"):
            _, op, pos = self.take()
            rhs = self.term()
            val = self._add(val, rhs if op == "+" else -rhs, pos)
        return val

    def _starts_atom(self) -> bool:
        kind, v, _ = self.peek()
        return kind in ("num", "sqrt", "name", "letter") or v == "("

    def term(self) -> NcPoly:
        val = self.factor()
        while True:
            kind, v, pos = self.peek()
            if v == "*":
                self.take()
                val = val * self.factor()
            elif v == "/":
                self.take()
                _, _, dpos = self.peek()
                den = self.factor()
                if den.degree != 0 or den.is_zero():
                    raise ParseError("division only by nonzero scalars", dpos)
                val = val / den.coeff("")
            elif self._starts_atom():
                val = val * self.factor()
            else:
                return val

    def factor(self) -> NcPoly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, v, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            base = base ** int(v)
        return base

    def atom(self) -> NcPoly:
        kind, v, pos = self.take()
        if kind == "num":
            return NcPoly(0, {"": int(v)})
        if kind == "letter":
            return NcPoly.word(v)
        if kind == "name":
            if v not in NAMED:
                raise ParseError(f"unknown name {v!r}", pos)
            return NAMED[v]
        if kind == "sqrt":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            if inner.degree != 0:
                raise ParseError("sqrt of a non-scalar", pos)
            r = inner.coeff("")
            if r == 0:
                return NcPoly(0)
            try:
                self.tower = join_towers(self.tower, tower_of(r))
                self.tower, root = adjoin_sqrt(self.tower, r)
            except CubicyError as exc:
                raise ParseError(str(exc), pos) from exc
            return NcPoly(0, {"": root})
        if v == "(":
            val = self.expr()
            self.expect(")")
            return val
        if kind is None:
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {v!r}", pos)


def parse_expression(text: str, tower: Optional[FieldTower] = None):
    """Parse an element of k<x, y>; return (NcPoly, tower used)."""
    p = _Parser(text, tower)
    return p.parse(), p.tower


def parse_scalar(text: str, tower: Optional[FieldTower] = None):
    val, _ = parse_expression(text, tower)
    if val.degree != 0:
        raise ParseError("expected a scalar", 0)
    return val.coeff("")


def parse_potential(text: str, degree: int = 4, tower: Optional[FieldTower] = None) -> NcPoly:
    val, _ = parse_expression(text, tower)
    if val.is_zero():
        return NcPoly.zero(degree)
    if val.degree != degree:
        raise NonHomogeneous(f"expected degree {degree}, got degree {val.degree}", 0)
    return val


def _split_top(text: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def _strip_brackets(text: str, pair: str) -> str:
    t = text.strip()
    if not (t.startswith(pair[0]) and t.endswith(pair[1])):
        raise ParseError(f"expected {pair[0]}...{pair[1]}", 0)
    return t[1:-1]


def parse_matrix(text: str) -> GL2:
    """``[[a, b], [c, d]]``; x goes to a x + c y and y to b x + d y."""
    rows = _split_top(_strip_brackets(text, "[]"))
    if len(rows) != 2:
        raise ParseError("expected two rows", 0)
    tower = QQ
    entries = []
    for row in rows:
        cells = _split_top(_strip_brackets(row, "[]"))
        if len(cells) != 2:
            raise ParseError("expected two entries per row", 0)
        for cell in cells:
            val, tower = parse_expression(cell, tower)
            if val.degree != 0:
                raise ParseError("matrix entries must be scalars", 0)
            entries.append(val.coeff(""))
    try:
        return GL2(*entries)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from exc


def parse_point(text: str):
    """A point of P^1 x P^1 written ``(p0:p1),(q0:q1)``."""
    parts = _split_top(text)
    if len(parts) == 1:
        parts = _split_top(_strip_brackets(text, "()"))
    if len(parts) != 2:
        raise ParseError("expected two points of P^1", 0)
    tower = QQ
    out = []
    for part in parts:
        coords = _strip_brackets(part, "()").split(":")
        if len(coords) != 2:
            raise ParseError("expected homogeneous coordinates a:b", 0)
        pt = []
        for c in coords:
            val, tower = parse_expression(c, tower)
            if val.degree != 0:
                raise ParseError("coordinates must be scalars", 0)
            pt.append(val.coeff(""))
        out.append(tuple(pt))
    return tuple(out)
