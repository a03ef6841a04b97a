import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from gkmring.linalg import EchelonBasis, intersect_spans, rank, rref, rref_kernel, solve


def test_identity():
    r, red, ker = rref_kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert r == 3 and ker == []


def test_zero():
    r, red, ker = rref_kernel([[0, 0, 0], [0, 0, 0]])
    assert r == 0 and len(ker) == 3


def test_proportional_rows():
    r, red, ker = rref_kernel([[1, 1], [2, 2]])
    assert r == 1
    assert ker == [[-1, 1]]  # spans (1, -1)


def test_rref_shape():
    m = [[2, 4, 1], [1, 2, 0], [3, 6, 2]]
    red, piv = rref(m)
    for i, p in enumerate(piv):
        assert red[i][p] == 1
        assert all(red[k][p] == 0 for k in range(len(red)) if k != i)


def test_intersections():
    e1, e2, e3 = [1, 0, 0], [0, 1, 0], [0, 0, 1]
    a = [[1, 2, 3], [0, 1, 1]]
    assert intersect_spans([a, a], 3) == rref(a)[0][:2]
    assert intersect_spans([[e1, e2], [e2, e3]], 3) == [e2]
    assert intersect_spans([[e1], [e2]], 3) == []
    assert intersect_spans([a], 3) == rref(a)[0][:2]


def test_solve():
    x = solve([[1, 1], [1, 0]], [3, 1])
    assert x == [1, 2]
    assert solve([[1, 1]], [1, 0]) is None


matrices = st.integers(1, 5).flatmap(lambda c: st.lists(
    st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=5))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rref_properties(m):
    ncols = len(m[0])
    r, red, ker = rref_kernel(m)
    assert r + len(ker) == ncols
    for v in ker:
        for row in m:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
    assert rref(red)[0] == red
    assert rank(m) == r


def _random_space(rng, n, k):
    return [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]


def test_dimension_formula():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 6)
        a = _random_space(rng, n, rng.randint(1, n))
        b = _random_space(rng, n, rng.randint(1, n))
        cap = intersect_spans([a, b], n)
        assert len(cap) + rank(a + b) == rank(a) + rank(b)
        span_a, span_b = EchelonBasis(n), EchelonBasis(n)
        for v in a:
            span_a.add(v)
        for v in b:
            span_b.add(v)
        for v in cap:
            assert span_a.contains(v) and span_b.contains(v)
