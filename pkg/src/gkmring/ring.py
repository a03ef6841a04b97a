"""Graded structure of the solution algebra of a congruence system.

All degrees here are polynomial degrees ``d``; the matching cohomological
degree is ``2d``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import GroupActionMismatch, NotInSpan
from .gkm import ClassTuple, CongruenceSystem, constraint_rows
from .lattice import FiniteMatrixGroup, molien_series, series_inverse, series_mul, trivial_group
from .linalg import EchelonBasis, intersect_spans, rref_kernel, solve
from .poly import Polynomial, invariant_basis, monomial_index, monomials

DEFAULT_BOUND = 8


@dataclass
class HilbertData:
    dims: list
    bound: int

    def cohomological(self) -> dict[int, int]:
        return {2 * d: n for d, n in enumerate(self.dims)}


@dataclass
class FreenessVerdict:
    passed: bool
    bound: int
    betti: list            # b_d from minimal generators
    predicted: list        # coefficients of b(t) * base series
    dims: list             # actual Hilbert dims
    quotient: list         # dims / base series, by truncated division
    warnings: list = field(default_factory=list)

    @property
    def failed_degree(self):
        for d, (a, b) in enumerate(zip(self.dims, self.predicted)):
            if a != b:
                return d
        return None

    def message(self) -> str:
        if self.passed:
            return f"PASS (verified through degree {self.bound}; truncated necessary condition)"
        return f"FAIL at degree {self.failed_degree} (checked through degree {self.bound})"


@dataclass
class GeneratorSet:
    generators: list            # (degree, ClassTuple)
    betti: list                 # count per degree
    group: FiniteMatrixGroup | None = None  # None: coefficients range over all polynomials
    verdict: FreenessVerdict | None = None

    @property
    def degrees(self) -> list[int]:
        return [d for d, _ in self.generators]

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, k):
        return self.generators[k]


# -- vector <-> tuple helpers ---------------------------------------------

def _to_class(sys: CongruenceSystem, d: int, vec) -> ClassTuple:
    nm = len(monomials(sys.rank, d))
    return ClassTuple({v.id: Polynomial.from_vector(sys.rank, d, vec[i * nm:(i + 1) * nm])
                       for i, v in enumerate(sys.vertices)})


def _to_vector(sys: CongruenceSystem, d: int, c) -> list[Fraction]:
    out = []
    for vid in sys.vertex_ids:
        out.extend(c[vid].coefficient_vector(d))
    return out


def _multiply(sys: CongruenceSystem, vec, d: int, p: Polynomial, e: int) -> list[Fraction]:
    """Vector of ``p * c`` in degree ``d + e`` for the degree-``d`` tuple ``vec``."""
    r = sys.rank
    src = monomials(r, d)
    nm, nt = len(src), len(monomials(r, d + e))
    idx = monomial_index(r, d + e)
    out = [Fraction(0)] * (nt * len(sys.vertices))
    terms = list(p.terms.items())
    for col, x in enumerate(vec):
        if not x:
            continue
        block, j = divmod(col, nm)
        m = src[j]
        for exp, c in terms:
            out[block * nt + idx[tuple(a + b for a, b in zip(m, exp))]] += x * c
    return out


def _kernel(sys: CongruenceSystem, d: int) -> list[list[Fraction]]:
    ncols = len(monomials(sys.rank, d)) * len(sys.vertices)
    rows = constraint_rows(sys, d)
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    _, _, kernel = rref_kernel(rows, ncols)
    return kernel


# -- public operations ----------------------------------------------------

def graded_basis(sys: CongruenceSystem, d: int) -> list[ClassTuple]:
    """Basis of the degree-``d`` piece of the solution algebra."""
    return [_to_class(sys, d, v) for v in _kernel(sys, d)]


def hilbert_series(sys: CongruenceSystem, D: int = DEFAULT_BOUND) -> HilbertData:
    return HilbertData([len(_kernel(sys, d)) for d in range(D + 1)], D)


def invariant_algebra_generators(G: FiniteMatrixGroup, D: int) -> list[tuple[int, Polynomial]]:
    """Homogeneous generators of the invariant ring of ``G`` in degrees 1..D.

    In each degree, invariants outside the span of products of lower-degree
    invariants are kept.
    """
    r = G.rank
    if G.is_trivial():
        return [(1, Polynomial.variable(r, i + 1)) for i in range(r)]
    bases = {e: invariant_basis(G, e) for e in range(1, D + 1)}
    gens: list[tuple[int, Polynomial]] = []
    for e in range(1, D + 1):
        span = EchelonBasis(len(monomials(r, e)))
        for a in range(1, e):
            for p in bases[a]:
                for q in bases[e - a]:
                    span.add((p * q).coefficient_vector(e))
        for p in bases[e]:
            if span.add(p.coefficient_vector(e)):
                gens.append((e, p))
    return gens


def _action_warnings(sys: CongruenceSystem, G: FiniteMatrixGroup) -> list[str]:
    """Reasons the diagonal action of G-invariants might not preserve the system."""
    out = []
    for v in sys.vertices:
        for g in v.isotropy:
            if g not in G:
                out.append(f"isotropy generator of {v.id!r} is not in the coefficient group")
                break
    for i, c in enumerate(sys.constraints):
        for t in c.terms:
            if t.twist is not None and not t.twist.is_identity() and t.twist not in G:
                out.append(f"twist in constraint {i} is not in the coefficient group")
                break
    return out


class _Engine:
    """Degree-by-degree bases and augmentation-ideal pieces for one system."""

    def __init__(self, sys: CongruenceSystem, D: int, group: FiniteMatrixGroup | None):
        self.sys = sys
        self.D = D
        self.group = group if group is not None else trivial_group(sys.rank)
        self.bases = [_kernel(sys, d) for d in range(D + 1)]
        self.ring_gens = invariant_algebra_generators(self.group, D)
        self.warnings = _action_warnings(sys, self.group)
        for w in self.warnings:
            warnings.warn(w, GroupActionMismatch, stacklevel=3)

    def ncols(self, d):
        return len(monomials(self.sys.rank, d)) * len(self.sys.vertices)

    def ideal(self, d: int) -> EchelonBasis:
        """Span of p * h for generators p of the coefficient ring and h in lower degrees."""
        n = self.ncols(d)
        span = EchelonBasis(n)
        for e, p in self.ring_gens:
            if e > d:
                continue
            for h in self.bases[d - e]:
                span.add(_multiply(self.sys, h, d - e, p, e))
        if self.warnings and len(span):
            # products may leave the algebra; keep only what stays inside
            inside = intersect_spans([span.vectors(), self.bases[d]], n) if self.bases[d] else []
            span = EchelonBasis(n)
            for v in inside:
                span.add(v)
        return span


def _quotient_dims(engine: _Engine) -> tuple[list[int], list[list]]:
    betti, gens = [], []
    for d in range(engine.D + 1):
        span = engine.ideal(d)
        b = len(engine.bases[d]) - len(span)
        picked = []
        for v in engine.bases[d]:
            if len(picked) == b:
                break
            if span.add(v):
                picked.append(v)
        betti.append(b)
        gens.append(picked)
    return betti, gens


def _series_quotient(dims, base, D):
    inv = series_inverse(base, D)
    q = series_mul([Fraction(x) for x in dims], inv, D)
    return [int(x) if x.denominator == 1 else x for x in q]


def minimal_generators(sys: CongruenceSystem, D: int = DEFAULT_BOUND, over="full"):
    """Minimal homogeneous module generators and a truncated freeness check.

    ``over`` is ``"full"`` (all polynomials act diagonally) or a
    :class:`FiniteMatrixGroup` whose invariants act.  Returns
    ``(GeneratorSet, FreenessVerdict)``.
    """
    group = None if isinstance(over, str) and over == "full" else over
    if isinstance(over, str) and over != "full":
        raise ValueError(f"unknown coefficient ring {over!r}")
    engine = _Engine(sys, D, group)
    betti, picked = _quotient_dims(engine)
    generators = [(d, _to_class(sys, d, v)) for d in range(D + 1) for v in picked[d]]
    base = molien_series(engine.group, D)
    dims = [len(b) for b in engine.bases]
    predicted = series_mul(betti, base, D)
    quotient = _series_quotient(dims, base, D)
    nonneg = all(isinstance(x, int) and x >= 0 for x in quotient)
    verdict = FreenessVerdict(predicted == dims and nonneg, D, betti, predicted, dims, quotient,
                              list(engine.warnings))
    return GeneratorSet(generators, betti, group, verdict), verdict


def _coefficient_basis(gens: GeneratorSet, rank: int, e: int) -> list[Polynomial]:
    if gens.group is None or gens.group.is_trivial():
        return [Polynomial.monomial(m) for m in monomials(rank, e)]
    return invariant_basis(gens.group, e)


def module_coordinates(sys: CongruenceSystem, gens: GeneratorSet, c) -> list[Polynomial]:
    """Coefficients ``f_k`` with ``c == sum f_k * e_k``, solved degree by degree."""
    if not isinstance(c, ClassTuple):
        c = sys.make_class(c)
    r = sys.rank
    coords = [Polynomial.zero(r) for _ in gens.generators]
    for d in c.degrees():
        target = _to_vector(sys, d, c.component(d))
        columns, owners = [], []
        for k, (e, gen) in enumerate(gens.generators):
            if e > d:
                continue
            gvec = _to_vector(sys, e, gen)
            for p in _coefficient_basis(gens, r, d - e):
                columns.append(_multiply(sys, gvec, e, p, d - e))
                owners.append((k, p))
        x = solve(columns, target, len(target)) if columns else None
        if x is None:
            raise NotInSpan(f"degree-{d} component is not in the span of the generators")
        for (k, p), val in zip(owners, x):
            if val:
                coords[k] = coords[k] + p.scale(val)
    return coords


def recombine(gens: GeneratorSet, coords: Sequence[Polynomial]) -> ClassTuple:
    total = None
    for (_, e), f in zip(gens.generators, coords):
        term = e * f
        total = term if total is None else total + term
    return total


def structure_constants(sys: CongruenceSystem, gens: GeneratorSet, D: int = DEFAULT_BOUND) -> dict:
    """Coordinates of every product ``e_i * e_j`` in the generator basis."""
    top = max(gens.degrees, default=0)
    if 2 * top > D:
        raise ValueError(f"need D >= {2 * top} for products of generators of degree {top}")
    table = {}
    for i, (_, a) in enumerate(gens.generators):
        for j in range(i, len(gens.generators)):
            coords = module_coordinates(sys, gens, a * gens.generators[j][1])
            table[(i, j)] = coords
            table[(j, i)] = coords
    return table


def ordinary_betti(sys: CongruenceSystem, D: int = DEFAULT_BOUND, mode="full",
                   group: FiniteMatrixGroup | None = None) -> list[int]:
    """Graded dimensions of the quotient by diagonal positive-degree classes.

    Entry ``d`` is the Betti number in cohomological degree ``2d``.  In
    ``"full"`` mode all polynomials are divided out; in ``"weyl"`` mode only
    the invariants of ``group`` (default: the system's Weyl group).
    """
    if mode == "full":
        G = None
    elif mode == "weyl":
        G = group if group is not None else sys.weyl_group
        if G is None:
            raise ValueError("weyl mode needs a group; the system declares none")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    betti, _ = _quotient_dims(_Engine(sys, D, G))
    return betti


def trim(values: Sequence[int]) -> list[int]:
    """Drop trailing zeros."""
    out = list(values)
    while out and out[-1] == 0:
        out.pop()
    return out
