import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from gkmring.errors import GroupTooLarge, NotPrimitive, ZeroWeight
from gkmring.lattice import (WeylElement, determinant, extend_to_unimodular_basis, generate_group,
                             is_primitive, molien_series, orbit_with_stabilizer, primitive_part,
                             random_unimodular, transposition, trivial_group)
from gkmring.poly import invariant_basis


def s3():
    return generate_group([transposition(1, 2, 3), transposition(2, 3, 3)])


@pytest.mark.parametrize("v, expected", [
    ((2, 2, -4), ((1, 1, -2), 2)),
    ((1, -1, 0), ((1, -1, 0), 1)),
    ((0, -3), ((0, -1), 3)),
])
def test_primitive_part(v, expected):
    assert primitive_part(v) == expected


def test_primitive_part_zero():
    with pytest.raises(ZeroWeight):
        primitive_part((0, 0, 0))


def test_unimodular_basis_examples():
    assert extend_to_unimodular_basis((1, 0, 0)) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    m = extend_to_unimodular_basis((1, 1, -2))
    assert m[0] == (1, 1, -2)
    assert abs(determinant(m)) == 1
    with pytest.raises(NotPrimitive):
        extend_to_unimodular_basis((2, 0))


def test_unimodular_basis_random():
    rng = random.Random(7)
    done = 0
    while done < 200:
        r = rng.randint(1, 4)
        chi = tuple(rng.randint(-9, 9) for _ in range(r))
        if not is_primitive(chi):
            continue
        m = extend_to_unimodular_basis(chi)
        assert m[0] == chi
        assert abs(determinant(m)) == 1
        done += 1


def test_generate_group_orders():
    assert s3().order == 6
    assert generate_group([WeylElement([[-1]])]).order == 2
    with pytest.raises(GroupTooLarge):
        generate_group([WeylElement([[1, 1], [0, 1]])], bound=500)


def test_group_closure_and_inverses():
    G = s3()
    assert G.elements[0].is_identity()
    for a, b in itertools.product(G, G):
        assert a @ b in G
    for a in G:
        assert a.inverse() in G


def test_group_order_is_deterministic():
    a = generate_group([transposition(1, 2, 3), transposition(2, 3, 3)])
    b = generate_group([transposition(1, 2, 3), transposition(2, 3, 3)])
    assert [g.matrix for g in a] == [g.matrix for g in b]


def test_orbit_examples():
    G = s3()
    orbit, stab = orbit_with_stabilizer(G, (2, 0, -2))
    assert len(orbit) == 6 and stab.order == 1
    orbit, stab = orbit_with_stabilizer(G, (1, 1, -2))
    assert len(orbit) == 3
    assert sorted(g.matrix for g in stab) == sorted([transposition(1, 2, 3).matrix,
                                                     WeylElement.identity(3).matrix])
    orbit, stab = orbit_with_stabilizer(G, (0, 0, 0))
    assert [mu for mu, _ in orbit] == [(0, 0, 0)] and stab.order == 6


def test_orbit_stabilizer_counts():
    G = s3()
    rng = random.Random(3)
    for _ in range(20):
        lam = tuple(rng.randint(-2, 2) for _ in range(3))
        orbit, stab = orbit_with_stabilizer(G, lam)
        assert len(orbit) * stab.order == G.order
        assert len({mu for mu, _ in orbit}) == len(orbit)
        for mu, w in orbit:
            assert w.apply(lam) == mu


def _partitions_at_most(d, parts):
    """Number of partitions of d into at most ``parts`` parts (brute force)."""
    return sum(1 for c in itertools.product(range(d + 1), repeat=parts)
               if sum(c) == d and list(c) == sorted(c, reverse=True))


def test_molien_s3():
    expected = [_partitions_at_most(d, 3) for d in range(5)]
    assert expected == [1, 1, 2, 3, 4]
    assert molien_series(s3(), 4) == expected


@pytest.mark.parametrize("r", [1, 2, 3])
def test_molien_trivial(r):
    assert molien_series(trivial_group(r), 6) == [comb(d + r - 1, r - 1) for d in range(7)]


def test_molien_sign():
    assert molien_series(generate_group([WeylElement([[-1]])]), 4) == [1, 0, 1, 0, 1]


@pytest.mark.parametrize("gens", [
    [transposition(1, 2, 3), transposition(2, 3, 3)],
    [WeylElement([[0, -1], [1, 0]])],
    [WeylElement([[-1, 0], [1, 1]]), WeylElement([[1, 3], [0, -1]])],
])
def test_molien_matches_invariant_basis(gens):
    G = generate_group(gens)
    series = molien_series(G, 5)
    assert series == [len(invariant_basis(G, d)) for d in range(6)]


def test_random_unimodular():
    rng = random.Random(1)
    for r in (1, 2, 3):
        for _ in range(10):
            assert abs(determinant(random_unimodular(r, rng))) == Fraction(1)
