"""Sparse multivariate polynomials over the rationals.

Variables ``x1 .. xr`` are the coordinate linear forms of a rank-``r``
weight lattice, so a weight ``lam`` is the degree-one polynomial
``sum(lam[i] * x(i+1))``.  Monomials are ordered graded-lexicographically
throughout (``x1^2 > x1*x2 > x2^2 > ...`` in each degree).
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import NotPrimitive, ParseError, RankMismatch, UnknownVariable
from .lattice import (FiniteMatrixGroup, WeylElement, extend_to_unimodular_basis,
                      integer_inverse, is_primitive)


@lru_cache(maxsize=None)
def monomials(r: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of total degree ``d`` in ``r`` variables, lex-descending."""
    if r == 0:
        return ((),) if d == 0 else ()
    if r == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(r - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(r: int, d: int) -> dict:
    return {m: i for i, m in enumerate(monomials(r, d))}


def _grlex_key(exp):
    return (sum(exp), exp)


class Polynomial:
    """Immutable polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero :class:`~fractions.Fraction`.
    """

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms: Mapping | None = None):
        self.rank = rank
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != rank:
                    raise RankMismatch(f"exponent {exp} has wrong length for rank {rank}")
                c = Fraction(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, rank, terms):
        p = cls.__new__(cls)
        p.rank = rank
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, rank: int) -> Polynomial:
        return cls._raw(rank, {})

    @classmethod
    def constant(cls, rank: int, c) -> Polynomial:
        c = Fraction(c)
        return cls._raw(rank, {(0,) * rank: c} if c else {})

    @classmethod
    def variable(cls, rank: int, i: int) -> Polynomial:
        """The variable ``x{i}`` (1-based)."""
        if not 1 <= i <= rank:
            raise UnknownVariable(f"x{i} in rank {rank}")
        return cls._raw(rank, {tuple(int(j == i - 1) for j in range(rank)): Fraction(1)})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> Polynomial:
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def linear_form(cls, weight: Sequence[int]) -> Polynomial:
        r = len(weight)
        return cls(r, {tuple(int(j == i) for j in range(r)): c for i, c in enumerate(weight)})

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_components(self) -> dict[int, Polynomial]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._raw(self.rank, t) for d, t in sorted(parts.items())}

    def component(self, d: int) -> Polynomial:
        return Polynomial._raw(self.rank, {e: c for e, c in self.terms.items() if sum(e) == d})

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total

    def coefficient(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def coefficient_vector(self, d: int) -> list[Fraction]:
        """Coefficients of the degree-``d`` part in graded-lex monomial order."""
        return [self.terms.get(m, Fraction(0)) for m in monomials(self.rank, d)]

    @classmethod
    def from_vector(cls, rank: int, d: int, vec: Sequence) -> Polynomial:
        return cls._raw(rank, {m: Fraction(c) for m, c in zip(monomials(rank, d), vec) if c})

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.rank != self.rank:
                raise RankMismatch(f"rank {self.rank} vs {other.rank}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.rank, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.rank)
        return Polynomial._raw(self.rank, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.rank, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.rank, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.rank, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self.rank}, {str(self)!r})"


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x\d+)|(?P<op>[-+*^()])|(?P<bad>\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group("bad") is not None:
            raise ParseError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, rank):
        self.tokens = _tokenize(text)
        self.i = 0
        self.rank = rank

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self):
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return result

    def expr(self):
        result = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                result = result + rhs if val == "+" else result - rhs
            else:
                return result

    def term(self):
        result = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.unary()
            else:
                return result

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a nonnegative integer literal", pos)
            return base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            if "/" in val:
                num, den = val.split("/")
                if int(den) == 0:
                    raise ParseError("division by zero in rational literal", pos)
                return Polynomial.constant(self.rank, Fraction(int(num), int(den)))
            return Polynomial.constant(self.rank, int(val))
        if kind == "var":
            idx = int(val[1:])
            if not 1 <= idx <= self.rank:
                raise UnknownVariable(f"unknown variable {val} for rank {self.rank} (at position {pos})")
            return Polynomial.variable(self.rank, idx)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_polynomial(text: str, rank: int) -> Polynomial:
    """Parse an expression such as ``"1/2*(x1 - x2)^2 + 3"`` in ``rank`` variables."""
    return _Parser(text, rank).parse()


# -- linear substitutions -------------------------------------------------

def substitute(f: Polynomial, s: Sequence[Sequence[int]]) -> Polynomial:
    """Linear substitution ``x_j -> sum_i s[i][j] * x_i``.

    Column ``j`` of ``s`` is the image of the ``j``-th coordinate weight.
    """
    r = f.rank
    if len(s) != r:
        raise RankMismatch(f"matrix of size {len(s)} acting on rank {r}")
    images = [Polynomial.linear_form([s[i][j] for i in range(r)]) for j in range(r)]
    powers: dict = {}

    def power(j, k):
        key = (j, k)
        if key not in powers:
            powers[key] = images[j] ** k
        return powers[key]

    out = Polynomial.zero(r)
    for e, c in f.terms.items():
        term = Polynomial.constant(r, c)
        for j, k in enumerate(e):
            if k:
                term = term * power(j, k)
        out = out + term
    return out


def weyl_apply(w: WeylElement, f: Polynomial) -> Polynomial:
    """Act on ``f`` by the ring automorphism extending ``w`` on linear forms."""
    if w.rank != f.rank:
        raise RankMismatch(f"element of rank {w.rank} acting on polynomial of rank {f.rank}")
    return substitute(f, w.matrix)


def change_to_modulus_coordinates(f: Polynomial, chi: Sequence[int]) -> Polynomial:
    """Rewrite ``f`` in variables ``y`` with ``y1`` equal to the linear form ``chi``."""
    m = extend_to_unimodular_basis(chi)
    minv = integer_inverse(m)
    # x = minv @ y, i.e. x_i -> sum_k minv[i][k] y_k
    s = tuple(tuple(minv[i][k] for i in range(len(minv))) for k in range(len(minv)))
    return substitute(f, s)


def divisibility_order(f: Polynomial, chi: Sequence[int]):
    """Largest ``k`` with ``chi**k`` dividing ``f``; ``math.inf`` for ``f == 0``."""
    if len(chi) != f.rank:
        raise RankMismatch("weight length differs from polynomial rank")
    if not is_primitive(chi):
        raise NotPrimitive(f"{tuple(chi)} is not primitive")
    if f.is_zero():
        return math.inf
    g = change_to_modulus_coordinates(f, chi)
    return min(e[0] for e in g.terms)


# -- invariants -----------------------------------------------------------

def invariant_basis(G: FiniteMatrixGroup, d: int) -> list[Polynomial]:
    """Basis of the degree-``d`` polynomials fixed by every element of ``G``.

    Each monomial is averaged over the group and the averages are row reduced.
    """
    from .linalg import row_basis

    r = G.rank
    mons = monomials(r, d)
    if G.is_trivial():
        return [Polynomial.monomial(m) for m in mons]
    rows = []
    for m in mons:
        mono = Polynomial.monomial(m)
        avg = Polynomial.zero(r)
        for g in G.elements:
            avg = avg + weyl_apply(g, mono)
        rows.append(avg.scale(Fraction(1, G.order)).coefficient_vector(d))
    return [Polynomial.from_vector(r, d, row) for row in row_basis(rows, len(mons))]


def polynomial_ring_dims(r: int, D: int) -> list[int]:
    return [math.comb(d + r - 1, r - 1) if r else int(d == 0) for d in range(D + 1)]


def as_polynomial(value, rank: int) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, str):
        return parse_polynomial(value, rank)
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(rank, value)
    if isinstance(value, Iterable):
        return Polynomial.linear_form(list(value))
    raise TypeError(f"cannot interpret {value!r} as a polynomial")
