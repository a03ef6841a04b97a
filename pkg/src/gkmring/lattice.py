"""Integer weight lattices and finite matrix groups acting on them.

Weights are plain tuples of ints.  A :class:`WeylElement` is an integer
matrix acting on column vectors of weights; products compose as matrices,
so ``(a @ b).apply(v) == a.apply(b.apply(v))``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import GroupTooLarge, NotPrimitive, RankMismatch, ZeroWeight

Weight = tuple  # tuple[int, ...]
Matrix = tuple  # tuple[tuple[int, ...], ...]

DEFAULT_GROUP_BOUND = 10080


def as_weight(v: Iterable[int]) -> Weight:
    return tuple(int(x) for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


def primitive_part(v: Sequence[int]) -> tuple[Weight, int]:
    """Split ``v`` as ``m * p`` with ``p`` primitive and ``m`` a positive integer.

    >>> primitive_part((2, 2, -4))
    ((1, 1, -2), 2)
    """
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ZeroWeight(f"zero weight {tuple(v)} has no primitive part")
    return tuple(int(x) // g for x in v), g


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def extend_to_unimodular_basis(chi: Sequence[int]) -> Matrix:
    """Integer matrix with determinant +-1 whose first row is ``chi``.

    When some coordinate of ``chi`` is +-1 the remaining rows are standard
    basis vectors, so ``(1, 0, 0)`` gives the identity.
    """
    chi = as_weight(chi)
    r = len(chi)
    if not is_primitive(chi):
        raise NotPrimitive(f"{chi} is not primitive")
    unit = [i for i, c in enumerate(chi) if abs(c) == 1]
    if unit:
        p = unit[0]
        rows = [chi] + [tuple(int(i == j) for j in range(r)) for i in range(r) if i != p]
        return tuple(rows)

    # Column operations U with chi @ U = e1; then chi is the first row of U^-1.
    row = list(chi)
    u = [[int(i == j) for j in range(r)] for i in range(r)]

    def col_combine(i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j); ad - bc = 1
        row[i], row[j] = a * row[i] + b * row[j], c * row[i] + d * row[j]
        for k in range(r):
            u[k][i], u[k][j] = a * u[k][i] + b * u[k][j], c * u[k][i] + d * u[k][j]

    for j in range(1, r):
        if row[j] == 0:
            continue
        a, b = row[0], row[j]
        g, x, y = _ext_gcd(a, b)
        # new col0 -> g, new colj -> 0
        col_combine(0, j, x, y, -b // g, a // g)
    if row[0] < 0:
        row[0] = -row[0]
        for k in range(r):
            u[k][0] = -u[k][0]
    assert row[0] == 1 and all(x == 0 for x in row[1:])
    inv = integer_inverse(tuple(tuple(x) for x in u))
    assert inv[0] == chi
    return inv


def determinant(m: Sequence[Sequence[int]]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[i][k] -= f * a[c][k]
    return det


def integer_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of a unimodular integer matrix."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = []
    for row in a:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(v) for v in vals))
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: Matrix, v: Sequence[int]) -> Weight:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def identity_matrix(r: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


@dataclass(frozen=True)
class WeylElement:
    """An integer matrix of determinant +-1 acting on the weight lattice."""

    matrix: Matrix
    label: str = field(default="", compare=False)

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if any(len(row) != len(m) for row in m):
            raise ValueError("WeylElement matrix must be square")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls, r: int) -> WeylElement:
        return cls(identity_matrix(r), "e")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def det(self) -> int:
        return int(determinant(self.matrix))

    def is_unimodular(self) -> bool:
        return abs(determinant(self.matrix)) == 1

    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(self.rank)

    def apply(self, v: Sequence[int]) -> Weight:
        if len(v) != self.rank:
            raise RankMismatch(f"weight of length {len(v)} for rank {self.rank}")
        return mat_vec(self.matrix, v)

    def __matmul__(self, other: WeylElement) -> WeylElement:
        if other.rank != self.rank:
            raise RankMismatch("rank mismatch in product")
        label = " ".join(x for x in (self.label, other.label) if x and x != "e")
        return WeylElement(mat_mul(self.matrix, other.matrix), label or "e")

    def inverse(self) -> WeylElement:
        return WeylElement(integer_inverse(self.matrix))

    def conjugate(self, u: Matrix) -> WeylElement:
        """Return ``u @ self @ u^-1`` (the same map written in a new lattice basis)."""
        return WeylElement(mat_mul(mat_mul(u, self.matrix), integer_inverse(u)), self.label)

    def sort_key(self):
        return tuple(x for row in self.matrix for x in row)

    def __repr__(self):
        tag = f", {self.label!r}" if self.label else ""
        return f"WeylElement({[list(r) for r in self.matrix]}{tag})"


def transposition(i: int, j: int, r: int) -> WeylElement:
    """Permutation matrix swapping coordinates ``i`` and ``j`` (1-based)."""
    rows = [list(row) for row in identity_matrix(r)]
    rows[i - 1], rows[j - 1] = rows[j - 1], rows[i - 1]
    return WeylElement(rows, f"({i} {j})")


class FiniteMatrixGroup:
    """A finite group of unimodular matrices listed element by element.

    ``elements[0]`` is always the identity.  ``generators`` holds indices into
    ``elements``.
    """

    def __init__(self, elements: Sequence[WeylElement], generators: Sequence[int] = ()):
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self._index = {g.matrix: i for i, g in enumerate(self.elements)}

    @property
    def rank(self) -> int:
        return self.elements[0].rank

    @property
    def order(self) -> int:
        return len(self.elements)

    def generator_elements(self) -> tuple[WeylElement, ...]:
        return tuple(self.elements[i] for i in self.generators)

    def index(self, g: WeylElement) -> int:
        return self._index[g.matrix]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: WeylElement) -> bool:
        return g.matrix in self._index

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __repr__(self):
        return f"FiniteMatrixGroup(order={self.order}, rank={self.rank})"


def generate_group(generators: Sequence[WeylElement], bound: int = DEFAULT_GROUP_BOUND,
                   rank: int | None = None) -> FiniteMatrixGroup:
    """Close ``generators`` under multiplication.

    Elements come out breadth-first by word length; within one length they
    are sorted lexicographically on matrix entries.
    """
    generators = list(generators)
    if rank is None:
        if not generators:
            raise ValueError("rank is required for an empty generator list")
        rank = generators[0].rank
    for g in generators:
        if g.rank != rank:
            raise RankMismatch("generators of different ranks")
        if not g.is_unimodular():
            raise ValueError(f"generator {g} is not unimodular")
    ident = WeylElement.identity(rank)
    elements = [ident]
    seen = {ident.matrix}
    frontier = [ident]
    while frontier:
        new = []
        for g in frontier:
            for s in generators:
                h = g @ s
                if h.matrix not in seen:
                    seen.add(h.matrix)
                    new.append(h)
                    if len(seen) > bound:
                        raise GroupTooLarge(f"group closure exceeded {bound} elements")
        new.sort(key=WeylElement.sort_key)
        elements.extend(new)
        frontier = new
    index = {g.matrix: i for i, g in enumerate(elements)}
    gens = []
    for s in generators:
        i = index[s.matrix]
        if i not in gens and i != 0:
            gens.append(i)
    return FiniteMatrixGroup(elements, gens)


def trivial_group(r: int) -> FiniteMatrixGroup:
    return FiniteMatrixGroup([WeylElement.identity(r)], ())


def subgroup(elements: Sequence[WeylElement]) -> FiniteMatrixGroup:
    """Wrap a list of elements already known to form a group, choosing generators greedily."""
    elements = list(elements)
    ident = [g for g in elements if g.is_identity()]
    rest = sorted((g for g in elements if not g.is_identity()), key=WeylElement.sort_key)
    ordered = ident + rest
    gens: list[WeylElement] = []
    span = {ordered[0].matrix}
    for g in rest:
        if g.matrix not in span:
            gens.append(g)
            span = {h.matrix for h in generate_group(gens, bound=len(elements))}
    if not gens:
        return FiniteMatrixGroup(ordered, ())
    # re-enumerate so element order is the canonical breadth-first one
    return generate_group(gens, bound=len(elements))


def orbit_with_stabilizer(G: FiniteMatrixGroup, lam: Sequence[int]):
    """Orbit of ``lam`` under ``G`` with a coset representative for each point.

    Returns ``(orbit, stabilizer)`` where ``orbit`` is a list of
    ``(mu, w)`` with ``w.apply(lam) == mu``.  Points are found breadth-first
    using the generators in order; each new layer is sorted by coordinates.
    """
    lam = as_weight(lam)
    if len(lam) != G.rank:
        raise RankMismatch("weight length differs from group rank")
    gens = G.generator_elements()
    orbit = [(lam, G.elements[0])]
    seen = {lam}
    frontier = orbit[:]
    while frontier:
        layer = []
        for mu, w in frontier:
            for s in gens:
                nu = s.apply(mu)
                if nu not in seen:
                    seen.add(nu)
                    layer.append((nu, s @ w))
        layer.sort(key=lambda t: t[0])
        orbit.extend(layer)
        frontier = layer
    stab = [g for g in G.elements if g.apply(lam) == lam]
    return orbit, subgroup(stab)


def _char_poly_det_one_minus(m: Matrix) -> list[Fraction]:
    """Coefficients of det(I - t*m) in increasing powers of t (Faddeev-LeVerrier)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # mk <- a @ mk + c[n-k+1] * I
        prod = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c[n - k + 1]
        mk = prod
        am = sum(sum(a[i][l] * mk[l][i] for l in range(n)) for i in range(n))
        c[n - k] = -am / k
    # det(I - t m) = sum_i c_i t^(n-i)
    return [c[n - k] for k in range(n + 1)]


def series_inverse(q: Sequence[Fraction], D: int) -> list[Fraction]:
    """Power series 1/q truncated after t^D; q[0] must be nonzero."""
    q = [Fraction(x) for x in q]
    out = [Fraction(0)] * (D + 1)
    out[0] = 1 / q[0]
    for k in range(1, D + 1):
        s = sum(q[i] * out[k - i] for i in range(1, min(k, len(q) - 1) + 1))
        out[k] = -s / q[0]
    return out


def series_mul(a: Sequence, b: Sequence, D: int) -> list:
    out = [0] * (D + 1)
    for i, x in enumerate(a[:D + 1]):
        if x:
            for j, y in enumerate(b[:D + 1 - i]):
                out[i + j] += x * y
    return out


def molien_series(G: FiniteMatrixGroup, D: int) -> list[int]:
    """Dimensions of the degree-0..D invariants of ``G`` via Molien's formula."""
    total = [Fraction(0)] * (D + 1)
    cache: dict = {}
    for g in G.elements:
        key = tuple(_char_poly_det_one_minus(g.matrix))
        if key not in cache:
            cache[key] = series_inverse(key, D)
        total = [x + y for x, y in zip(total, cache[key])]
    out = []
    for x in total:
        x /= G.order
        if x.denominator != 1:
            raise ArithmeticError("non-integral Molien coefficient")
        out.append(int(x))
    return out


def random_unimodular(r: int, rng: random.Random, steps: int = 6, spread: int = 2) -> Matrix:
    """A random integer matrix of determinant +-1 built from elementary operations."""
    m = [list(row) for row in identity_matrix(r)]
    if r == 1:
        return ((rng.choice((1, -1)),),)
    for _ in range(steps):
        i, j = rng.sample(range(r), 2)
        q = rng.randint(-spread, spread)
        m[i] = [x + q * y for x, y in zip(m[i], m[j])]
    perm = list(range(r))
    rng.shuffle(perm)
    m = [m[p] for p in perm]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    return tuple(tuple(row) for row in m)
