"""Congruence systems: tuples of polynomials indexed by fixed points.

A :class:`CongruenceSystem` describes a subalgebra of a product of
polynomial rings, one factor per vertex.  Each vertex may carry an isotropy
group under which its polynomial must be invariant, and each
:class:`CongruenceConstraint` asks that a twisted linear combination

    sum_t coeff_t * twist_t(f[vertex_t])

be divisible by ``modulus ** order``.  ``order == 0`` (or a zero modulus)
means the combination vanishes identically.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import RankMismatch
from .lattice import (FiniteMatrixGroup, WeylElement, as_weight, generate_group, mat_vec,
                      primitive_part, trivial_group)
from .poly import (Polynomial, as_polynomial, change_to_modulus_coordinates, divisibility_order,
                   monomials, substitute, weyl_apply)


@dataclass(frozen=True)
class Vertex:
    id: str
    moment: tuple
    isotropy: tuple = ()  # generators of the isotropy group, as WeylElements

    def __post_init__(self):
        object.__setattr__(self, "moment", as_weight(self.moment))
        object.__setattr__(self, "isotropy", tuple(self.isotropy))

    @cached_property
    def group(self) -> FiniteMatrixGroup:
        if not self.isotropy:
            return trivial_group(len(self.moment))
        return generate_group(self.isotropy, rank=len(self.moment))


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    vertex: str
    twist: WeylElement | None = None

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))


@dataclass(frozen=True)
class CongruenceConstraint:
    terms: tuple
    modulus: tuple
    order: int = 1

    def __post_init__(self):
        terms = tuple(t if isinstance(t, Term) else Term(*t) for t in self.terms)
        if not terms:
            raise ValueError("a constraint needs at least one term")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "modulus", as_weight(self.modulus))
        if self.order < 0:
            raise ValueError("order must be nonnegative")

    @property
    def is_equality(self) -> bool:
        return self.order == 0 or not any(self.modulus)

    def combination(self, values: Mapping[str, Polynomial]) -> Polynomial:
        out = None
        for t in self.terms:
            f = values[t.vertex]
            if t.twist is not None:
                f = weyl_apply(t.twist, f)
            f = f.scale(t.coeff)
            out = f if out is None else out + f
        return out


class ClassTuple(Mapping):
    """One polynomial per vertex id, with componentwise ring operations."""

    def __init__(self, values: Mapping[str, Polynomial]):
        self._values = dict(values)

    def __getitem__(self, key):
        return self._values[key]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    @property
    def rank(self) -> int:
        return next(iter(self._values.values())).rank

    def _zip(self, other, op):
        if set(other) != set(self._values):
            raise ValueError("class tuples over different vertex sets")
        return ClassTuple({k: op(v, other[k]) for k, v in self._values.items()})

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return ClassTuple({k: -v for k, v in self._values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassTuple):
            return self._zip(other, lambda a, b: a * b)
        if isinstance(other, Polynomial):
            return ClassTuple({k: v * other for k, v in self._values.items()})
        if isinstance(other, (int, Fraction)):
            return ClassTuple({k: v.scale(other) for k, v in self._values.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ClassTuple):
            return self._values == other._values
        if isinstance(other, Mapping):
            return self._values == dict(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._values.items()))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self._values.values())

    def degrees(self) -> list[int]:
        ds = set()
        for v in self._values.values():
            ds.update(sum(e) for e in v.terms)
        return sorted(ds)

    def component(self, d: int) -> ClassTuple:
        return ClassTuple({k: v.component(d) for k, v in self._values.items()})

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in self._values.items())
        return f"ClassTuple({{{inner}}})"


@dataclass(frozen=True)
class CongruenceSystem:
    rank: int
    vertices: tuple
    constraints: tuple = ()
    named_classes: dict = field(default_factory=dict, compare=False)
    group: tuple | None = None  # generators of an ambient Weyl group, if known

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.group is not None:
            object.__setattr__(self, "group", tuple(self.group))

    @property
    def vertex_ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    @cached_property
    def _position(self) -> dict:
        return {v.id: i for i, v in enumerate(self.vertices)}

    def position(self, vid: str) -> int:
        return self._position[vid]

    def vertex(self, vid: str) -> Vertex:
        return self.vertices[self._position[vid]]

    @cached_property
    def weyl_group(self) -> FiniteMatrixGroup | None:
        if self.group is None:
            return None
        return generate_group(self.group, rank=self.rank)

    def make_class(self, values) -> ClassTuple:
        """Build a ClassTuple from polynomials, strings, weights or constants."""
        if isinstance(values, Mapping):
            items = dict(values)
        else:
            items = dict(zip(self.vertex_ids, values))
        return ClassTuple({vid: as_polynomial(items[vid], self.rank) for vid in self.vertex_ids})

    def named(self, name: str) -> ClassTuple:
        return self.make_class(self.named_classes[name])


@dataclass
class ValidationReport:
    system: CongruenceSystem
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def validate_system(sys: CongruenceSystem) -> ValidationReport:
    """Check a system and return a normalized copy with all diagnostics.

    Moduli are replaced by their primitive parts; a zero modulus with
    positive order becomes an exact equality.
    """
    errors, warnings, notes = [], [], []
    r = sys.rank
    ids = sys.vertex_ids
    if len(set(ids)) != len(ids):
        errors.append("duplicate vertex ids")
    for v in sys.vertices:
        if len(v.moment) != r:
            errors.append(f"vertex {v.id!r}: moment has length {len(v.moment)}, rank is {r}")
            continue
        for g in v.isotropy:
            if g.rank != r:
                errors.append(f"vertex {v.id!r}: isotropy generator of rank {g.rank}")
            elif not g.is_unimodular():
                errors.append(f"vertex {v.id!r}: isotropy generator {g} is not unimodular")
            elif g.apply(v.moment) != v.moment:
                errors.append(f"vertex {v.id!r}: isotropy generator {g} moves the moment")
        if not errors:
            try:
                v.group
            except Exception as exc:
                errors.append(f"vertex {v.id!r}: isotropy group: {exc}")
    if sys.group is not None:
        for g in sys.group:
            if g.rank != r or not g.is_unimodular():
                errors.append(f"Weyl group generator {g} is not a unimodular rank-{r} matrix")
    known = set(ids)
    new_constraints = []
    for idx, c in enumerate(sys.constraints):
        bad = False
        for t in c.terms:
            if t.vertex not in known:
                errors.append(f"constraint {idx}: unknown vertex {t.vertex!r}")
                bad = True
            if t.twist is not None:
                if t.twist.rank != r:
                    errors.append(f"constraint {idx}: twist has rank {t.twist.rank}, expected {r}")
                    bad = True
                elif not t.twist.is_unimodular():
                    errors.append(f"constraint {idx}: twist {t.twist} is not unimodular")
                    bad = True
        if len(c.modulus) != r:
            errors.append(f"constraint {idx}: modulus has length {len(c.modulus)}, rank is {r}")
            bad = True
        if bad:
            new_constraints.append(c)
            continue
        if not any(c.modulus):
            if c.order > 0:
                warnings.append(f"constraint {idx}: zero modulus with order {c.order}; "
                                "treated as exact equality")
            notes.append(f"constraint {idx}: exact equality (order 0)")
            new_constraints.append(replace(c, order=0))
            continue
        p, m = primitive_part(c.modulus)
        if c.order == 0:
            notes.append(f"constraint {idx}: exact equality (order 0)")
        if m != 1:
            notes.append(f"constraint {idx}: modulus {c.modulus} normalized to {p}")
        new_constraints.append(replace(c, modulus=p))
    for name, values in sys.named_classes.items():
        missing = [vid for vid in ids if vid not in values]
        if missing:
            errors.append(f"class {name!r}: missing vertices {missing}")
    normalized = replace(sys, constraints=tuple(new_constraints))
    return ValidationReport(normalized, errors, warnings, notes)


@dataclass
class Violation:
    kind: str  # "invariance" or "congruence"
    index: int  # constraint index, or vertex position for invariance
    witness: Polynomial
    detail: str = ""


def _normalized_modulus(c: CongruenceConstraint):
    """(primitive modulus, effective order); order 0 for exact equalities."""
    if c.is_equality:
        return None, 0
    return primitive_part(c.modulus)[0], c.order


def satisfies(sys: CongruenceSystem, c) -> tuple[bool, Violation | None]:
    """Pointwise membership test for a class tuple.

    Invariance conditions are checked first (in vertex order), then
    congruences in listed order; the first failure is returned.
    """
    missing = [vid for vid in sys.vertex_ids if vid not in c]
    if missing:
        raise ValueError(f"class tuple is missing vertices {missing}")
    if not isinstance(c, ClassTuple):
        c = sys.make_class(c)
    for pos, v in enumerate(sys.vertices):
        f = c[v.id]
        for g in v.isotropy:
            diff = f - weyl_apply(g, f)
            if not diff.is_zero():
                return False, Violation("invariance", pos, diff,
                                        f"f[{v.id}] is not fixed by {g.label or g.matrix}")
    for idx, con in enumerate(sys.constraints):
        combo = con.combination(c)
        chi, order = _normalized_modulus(con)
        if order == 0:
            ok = combo.is_zero()
        else:
            ok = divisibility_order(combo, chi) >= order
        if not ok:
            return False, Violation("congruence", idx, combo,
                                    f"combination not divisible by {chi}^{order}" if order
                                    else "combination is not zero")
    return True, None


def constraint_rows(sys: CongruenceSystem, d: int) -> list[list[Fraction]]:
    """Linear conditions on the degree-``d`` coefficients of a class tuple.

    Columns are the graded-lex coefficient vectors of each vertex, in vertex
    order.  Rows come from isotropy invariance first, then from constraints
    in listed order; identically zero rows are dropped.
    """
    r = sys.rank
    mons = monomials(r, d)
    nm = len(mons)
    ncols = nm * len(sys.vertices)
    rows = []

    def emit(block_polys):
        # block_polys: list of (column, polynomial); one row per monomial
        table: dict = {}
        for col, p in block_polys:
            for e, coef in p.terms.items():
                table.setdefault(e, {})
                table[e][col] = table[e].get(col, 0) + coef
        return table

    for pos, v in enumerate(sys.vertices):
        base = pos * nm
        for g in v.isotropy:
            polys = []
            for j, m in enumerate(mons):
                mono = Polynomial.monomial(m)
                polys.append((base + j, mono - weyl_apply(g, mono)))
            table = emit(polys)
            for e in mons:
                entries = table.get(e)
                if entries and any(entries.values()):
                    row = [Fraction(0)] * ncols
                    for col, val in entries.items():
                        row[col] = Fraction(val)
                    rows.append(row)

    for con in sys.constraints:
        chi, order = _normalized_modulus(con)
        polys = []
        for t in con.terms:
            base = sys.position(t.vertex) * nm
            for j, m in enumerate(mons):
                p = Polynomial.monomial(m, t.coeff)
                if t.twist is not None:
                    p = weyl_apply(t.twist, p)
                if order:
                    p = change_to_modulus_coordinates(p, chi)
                polys.append((base + j, p))
        table = emit(polys)
        for e in mons:
            if order and e[0] >= order:
                continue
            entries = table.get(e)
            if entries and any(entries.values()):
                row = [Fraction(0)] * ncols
                for col, val in entries.items():
                    row[col] += Fraction(val)
                rows.append(row)
    return rows


# -- transformations used for invariance checks -------------------------

def change_lattice_basis(sys: CongruenceSystem, u) -> CongruenceSystem:
    """Rewrite every weight, group element and class in a new lattice basis.

    ``u`` is a unimodular integer matrix mapping old coordinates to new ones.
    """
    u = tuple(tuple(int(x) for x in row) for row in u)
    if len(u) != sys.rank:
        raise RankMismatch("basis change of the wrong size")

    def conj(g):
        return g.conjugate(u) if g is not None else None

    vertices = [Vertex(v.id, mat_vec(u, v.moment), tuple(conj(g) for g in v.isotropy))
                for v in sys.vertices]
    constraints = [CongruenceConstraint(tuple(Term(t.coeff, t.vertex, conj(t.twist)) for t in c.terms),
                                        mat_vec(u, c.modulus), c.order)
                   for c in sys.constraints]
    classes = {}
    for name, vals in sys.named_classes.items():
        tup = sys.make_class(vals)
        classes[name] = {k: substitute(p, u) for k, p in tup.items()}
    group = tuple(conj(g) for g in sys.group) if sys.group is not None else None
    return CongruenceSystem(sys.rank, vertices, constraints, classes, group)


def negate_moduli(sys: CongruenceSystem, which: Iterable[int] | None = None) -> CongruenceSystem:
    which = set(range(len(sys.constraints))) if which is None else set(which)
    constraints = [replace(c, modulus=tuple(-x for x in c.modulus)) if i in which else c
                   for i, c in enumerate(sys.constraints)]
    return replace(sys, constraints=tuple(constraints))


def permute_vertices(sys: CongruenceSystem, order: Sequence[int]) -> CongruenceSystem:
    vertices = [sys.vertices[i] for i in order]
    return replace(sys, vertices=tuple(vertices))
