"""Exact dense linear algebra over the rationals.

Matrices are lists of rows; entries are anything :class:`Fraction` accepts.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _to_rows(m, ncols=None):
    rows = [[Fraction(x) for x in row] for row in m]
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    return rows, ncols


def _pivot_key(x: Fraction):
    return (abs(x.numerator), x.denominator)


def rref(m, ncols=None):
    """Reduced row echelon form; returns ``(rref_rows, pivot_columns)``.

    In each column the nonzero entry with the smallest numerator is chosen as
    pivot, which keeps intermediate entries small.
    """
    rows, ncols = _to_rows(m, ncols)
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        cand = [i for i in range(r, nrows) if rows[i][c]]
        if not cand:
            continue
        p = min(cand, key=lambda i: _pivot_key(rows[i][c]))
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        nz = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for k in nz:
                        row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return rows[:r] + [[Fraction(0)] * ncols for _ in range(nrows - r)], pivots


def rref_kernel(m, ncols=None):
    """Rank, reduced row echelon form and kernel basis of ``m``.

    Kernel vectors follow the free-variable parametrization: one vector per
    non-pivot column, carrying a 1 there.
    """
    reduced, pivots = rref(m, ncols)
    if ncols is None:
        ncols = len(reduced[0])
    rank = len(pivots)
    pivot_set = set(pivots)
    kernel = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        kernel.append(v)
    return rank, reduced, kernel


def rank(m, ncols=None) -> int:
    if not m:
        return 0
    basis = EchelonBasis(ncols if ncols is not None else len(m[0]))
    for row in m:
        basis.add(row)
    return len(basis)


def row_basis(m, ncols=None) -> list[list[Fraction]]:
    """Nonzero rows of the reduced row echelon form."""
    if not m:
        return []
    reduced, pivots = rref(m, ncols)
    return reduced[:len(pivots)]


def intersect_spans(spaces: Sequence[Sequence[Sequence]], n: int) -> list[list[Fraction]]:
    """Basis (in reduced echelon form) of the intersection of the spans.

    Each span contributes the annihilator of itself as a set of linear
    conditions; the intersection is the common solution set.
    """
    conditions = []
    for space in spaces:
        if not space:
            return []
        _, _, annihilator = rref_kernel(space, n)
        conditions.extend(annihilator)
    if not conditions:
        return [list(map(Fraction, row)) for row in row_basis(spaces[0], n)] if spaces else \
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    _, _, kernel = rref_kernel(conditions, n)
    return row_basis(kernel, n)


def solve(columns: Sequence[Sequence], b: Sequence, n: int | None = None):
    """One solution ``x`` of ``sum_k x[k] * columns[k] == b``, or ``None``.

    Free variables are set to zero.
    """
    if n is None:
        n = len(b)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(b[i])] for i in range(n)]
    if not aug:
        return [Fraction(0)] * k
    reduced, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for i, p in enumerate(pivots):
        x[p] = reduced[i][k]
    return x


class EchelonBasis:
    """Incrementally maintained basis of a subspace of Q^n.

    ``add`` reduces a vector against the stored rows and keeps it when it is
    independent, so the stored rows always span what has been added.
    """

    def __init__(self, n: int):
        self.n = n
        self.rows: list[tuple[int, list[Fraction], list[int]]] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> list[Fraction]:
        v = [Fraction(x) for x in v]
        for p, row, nz in self.rows:
            f = v[p]
            if f:
                for k in nz:
                    v[k] -= f * row[k]
        return v

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def add(self, v) -> bool:
        v = self.reduce(v)
        p = next((k for k, x in enumerate(v) if x), None)
        if p is None:
            return False
        piv = v[p]
        if piv != 1:
            v = [x / piv for x in v]
        self.rows.append((p, v, [k for k, x in enumerate(v) if x]))
        return True

    def vectors(self) -> list[list[Fraction]]:
        return [row for _, row, _ in self.rows]
