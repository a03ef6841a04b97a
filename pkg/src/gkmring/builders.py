"""Concrete congruence systems: coadjoint orbits, fiber templates, and
multiplicity-free spaces (including the space of complete conics).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gkm import CongruenceConstraint, CongruenceSystem, Term, Vertex
from .lattice import (FiniteMatrixGroup, WeylElement, as_weight, generate_group,
                      orbit_with_stabilizer, primitive_part, transposition)
from .linalg import solve
from .poly import Polynomial


# Simple roots in fundamental-weight coordinates are the rows of the Cartan
# matrix; the simple reflection s_i sends lam to lam - lam[i] * alpha_i.
_CARTAN = {
    "A1": ((2,),),
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}


@dataclass(frozen=True)
class RootSystemData:
    id: str
    rank: int
    simple_roots: tuple
    reflections: tuple        # WeylElements, one per simple root
    positive_roots: tuple

    @property
    def weyl_group(self) -> FiniteMatrixGroup:
        return generate_group(self.reflections)

    def reflection(self, alpha) -> WeylElement:
        """The reflection of the Weyl group sending ``alpha`` to ``-alpha``."""
        alpha = as_weight(alpha)
        neg = tuple(-x for x in alpha)
        r = self.rank
        for g in self.weyl_group:
            if g.apply(alpha) != neg:
                continue
            if (g @ g).is_identity() and _fixed_rank(g) == r - 1:
                return g
        raise ValueError(f"{alpha} is not a root")


def _fixed_rank(g: WeylElement) -> int:
    from .linalg import rank
    r = g.rank
    diff = [[g.matrix[i][j] - int(i == j) for j in range(r)] for i in range(r)]
    return r - rank(diff, r)


def root_system(name: str) -> RootSystemData:
    """Root data for A1, A1xA1, A2, B2 or G2 in fundamental-weight coordinates."""
    if name not in _CARTAN:
        raise KeyError(f"unknown root system {name!r}; choose from {sorted(_CARTAN)}")
    cartan = _CARTAN[name]
    r = len(cartan)
    simple = tuple(tuple(row) for row in cartan)
    refl = []
    for i, alpha in enumerate(simple):
        # column j is the image of the j-th fundamental weight
        cols = [[int(j == k) - (alpha[k] if j == i else 0) for k in range(r)] for j in range(r)]
        refl.append(WeylElement(tuple(zip(*cols)), f"s{i + 1}"))
    roots = set()
    frontier = list(simple)
    roots.update(frontier)
    while frontier:
        nxt = []
        for beta in frontier:
            for s in refl:
                gamma = s.apply(beta)
                if gamma not in roots:
                    roots.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    columns = [list(a) for a in simple]
    positive = []
    for beta in sorted(roots):
        c = solve(columns, beta, r)
        if all(x >= 0 for x in c):
            positive.append(beta)
    positive.sort(key=lambda b: (sum(solve(columns, b, r)), b))
    return RootSystemData(name, r, simple, tuple(refl), tuple(positive))


def build_coadjoint_orbit(rs: RootSystemData, lam) -> CongruenceSystem:
    """Torus-equivariant model of the orbit through ``lam``.

    Vertices are the Weyl orbit of ``lam``; for each positive root and each
    pair of points it swaps, the two polynomials agree modulo the root.
    """
    lam = as_weight(lam)
    W = rs.weyl_group
    orbit, _ = orbit_with_stabilizer(W, lam)
    points = [mu for mu, _ in orbit]
    ids = {mu: f"v{i}" for i, mu in enumerate(points)}
    vertices = [Vertex(ids[mu], mu) for mu in points]
    constraints = []
    for alpha in rs.positive_roots:
        s = rs.reflection(alpha)
        chi, _ = primitive_part(alpha)
        done = set()
        for mu in points:
            nu = s.apply(mu)
            if nu == mu or nu in done:
                continue
            done.add(mu)
            constraints.append(CongruenceConstraint((Term(1, ids[mu]), Term(-1, ids[nu])), chi, 1))
    sigma = {ids[mu]: Polynomial.linear_form(mu) for mu in points}
    return CongruenceSystem(rs.rank, vertices, constraints, {"sigma": sigma}, rs.reflections)


_FIBER_SIZES = {"P1": 2, "Ruled": 4, "PV": 3}


def build_fiber_case(case: str, chi, ids: Sequence[str]) -> list[CongruenceConstraint]:
    """Constraints for a two-dimensional (``P1``) or four-dimensional
    (``Ruled``: ids y, s(y), z, s(z); ``PV``: ids y, s(y), z) fixed component.
    """
    if case not in _FIBER_SIZES:
        raise ValueError(f"unknown fiber case {case!r}")
    if len(ids) != _FIBER_SIZES[case]:
        raise ValueError(f"{case} takes {_FIBER_SIZES[case]} vertex ids, got {len(ids)}")
    chi = as_weight(chi)

    def diff(a, b):
        return CongruenceConstraint((Term(1, a), Term(-1, b)), chi, 1)

    if case == "P1":
        return [diff(ids[0], ids[1])]
    if case == "Ruled":
        y, sy, z, sz = ids
        return [diff(y, sy), diff(sy, z), diff(z, sz),
                CongruenceConstraint((Term(1, y), Term(1, sy), Term(-1, z), Term(-1, sz)), chi, 2)]
    y, sy, z = ids
    return [diff(y, sy), diff(sy, z),
            CongruenceConstraint((Term(1, y), Term(1, sy), Term(-2, z)), chi, 2)]


def build_fiber_system(case: str, chi=(1,)) -> CongruenceSystem:
    """A standalone system made of one fiber template, all moments zero."""
    chi = as_weight(chi)
    names = {"P1": ("y", "z"), "Ruled": ("y", "sy", "z", "sz"), "PV": ("y", "sy", "z")}[case]
    r = len(chi)
    vertices = [Vertex(v, (0,) * r) for v in names]
    return CongruenceSystem(r, vertices, build_fiber_case(case, chi, names))


@dataclass(frozen=True)
class SegmentSpec:
    i: int
    j: int
    w: WeylElement | None = None


def build_multiplicity_free(rank: int, orbit_data, segments: Sequence[SegmentSpec],
                            group: Sequence[WeylElement] | None = None) -> CongruenceSystem:
    """System of a multiplicity-free space from moment data and segments.

    ``orbit_data`` lists ``(lam_i, isotropy generators)``.  A segment
    ``(i, j, w)`` gives ``f_i - w(f_j) = 0`` modulo the primitive part of
    ``lam_i - w(lam_j)``, or exactly when that difference vanishes.
    """
    vertices = []
    for k, (lam, iso) in enumerate(orbit_data):
        vertices.append(Vertex(f"v{k}", as_weight(lam), tuple(iso)))
    constraints = []
    for seg in segments:
        w = seg.w
        li, lj = vertices[seg.i].moment, vertices[seg.j].moment
        wlj = w.apply(lj) if w is not None else lj
        delta = tuple(a - b for a, b in zip(li, wlj))
        twist = None if w is None or w.is_identity() else w
        terms = (Term(1, vertices[seg.i].id), Term(-1, vertices[seg.j].id, twist))
        if any(delta):
            chi, _ = primitive_part(delta)
            constraints.append(CongruenceConstraint(terms, chi, 1))
        else:
            constraints.append(CongruenceConstraint(terms, (0,) * rank, 0))
    sigma = {v.id: Polynomial.linear_form(v.moment) for v in vertices}
    return CongruenceSystem(rank, vertices, constraints, {"sigma": sigma}, group)


def build_complete_conics() -> CongruenceSystem:
    """The space of complete conics under U(3), lattice Z^3.

    Vertices: 2rho = (2,0,-2) with trivial isotropy, (1,1,-2) fixed by the
    swap of coordinates 1,2, and (2,-1,-1) fixed by the swap of 2,3.
    """
    s1 = transposition(1, 2, 3)
    s2 = transposition(2, 3, 3)
    s13 = transposition(1, 3, 3)
    data = [((2, 0, -2), ()), ((1, 1, -2), (s1,)), ((2, -1, -1), (s2,))]
    segments = [SegmentSpec(0, 1), SegmentSpec(0, 2), SegmentSpec(1, 2, s13)]
    return build_multiplicity_free(3, data, segments, group=(s1, s2))
