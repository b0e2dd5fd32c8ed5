"""Exact row reduction over the scalar towers."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

ZERO = Fraction(0)


class Echelon:
    """Incremental semi-echelon basis keyed by pivot position.

    Each stored row has a distinct pivot (its first nonzero entry), scaled to 1.
    Vectors are sparse dicts from position to nonzero scalar.
    """

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        vec = {k: v for k, v in vec.items() if v != 0}
        while vec:
            piv = min(vec)
            row = self.rows.get(piv)
            if row is None:
                return vec
            c = vec[piv]
            for k, v in row.items():
                nv = vec.get(k, ZERO) - c * v
                if nv == 0:
                    vec.pop(k, None)
                else:
                    vec[k] = nv
        return vec

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        vec = self.reduce(vec)
        if not vec:
            return False
        piv = min(vec)
        lead = vec[piv]
        self.rows[piv] = {k: v / lead for k, v in vec.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def _sparse(v: Sequence) -> dict:
    return {i: x for i, x in enumerate(v) if x != 0}


def rank(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.add(_sparse(v))
    return len(e)


def solve_in_span(basis, target) -> Optional[list]:
    """Coefficients c with sum c_i basis_i == target, or None.

    Row-reduces the augmented system [basis^T | target]; assumes nothing about
    independence and returns one solution.
    """
    n = len(basis)
    dim = len(target)
    # rows of the system: one per coordinate
    rows = [[basis[i][k] for i in range(n)] + [target[k]] for k in range(dim)]
    piv_cols = []
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, dim) if rows[i][col] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][col]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(dim):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, dim):
        if rows[i][n] != 0:
            return None
    sol = [ZERO] * n
    for i, col in enumerate(piv_cols):
        sol[col] = rows[i][n]
    return sol


def nullspace(rows) -> list:
    """Basis of {v : rows * v = 0}."""
    if not rows:
        return []
    m = len(rows[0])
    a = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for col in range(m):
        pr = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        lead = a[r][col]
        a[r] = [v / lead for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(col)
        r += 1
    free = [c for c in range(m) if c not in piv_cols]
    out = []
    for fc in free:
        v = [ZERO] * m
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            v[pc] = -a[i][fc]
        out.append(v)
    return out
