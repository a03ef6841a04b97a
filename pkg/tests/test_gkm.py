import random

import pytest

from gkmring.builders import build_complete_conics, build_fiber_system
from gkmring.gkm import (CongruenceConstraint, CongruenceSystem, Term, Vertex, change_lattice_basis,
                         constraint_rows, negate_moduli, satisfies, validate_system)
from gkmring.lattice import WeylElement, random_unimodular
from gkmring.linalg import rref_kernel


def two_vertex():
    return CongruenceSystem(1, [Vertex("y", (0,)), Vertex("z", (0,))],
                            [CongruenceConstraint([Term(1, "y"), Term(-1, "z")], (1,), 1)])


def test_validate_conics_clean():
    report = validate_system(build_complete_conics())
    assert report.ok and not report.warnings and not report.notes


def test_validate_normalizes_modulus():
    sys = CongruenceSystem(3, [Vertex("a", (0, 0, 0)), Vertex("b", (0, 0, 0))],
                           [CongruenceConstraint([Term(1, "a"), Term(-1, "b")], (2, 2, -4), 1)])
    report = validate_system(sys)
    assert report.ok
    assert any("normalized to (1, 1, -2)" in n for n in report.notes)
    assert report.system.constraints[0].modulus == (1, 1, -2)


def test_validate_unknown_vertex():
    sys = CongruenceSystem(1, [Vertex("a", (0,))],
                           [CongruenceConstraint([Term(1, "a")], (1,), 1),
                            CongruenceConstraint([Term(1, "nope")], (1,), 1)])
    report = validate_system(sys)
    assert not report.ok
    assert report.errors == ["constraint 1: unknown vertex 'nope'"]


def test_validate_zero_modulus_and_bad_twist():
    sys = CongruenceSystem(2, [Vertex("a", (0, 0)), Vertex("b", (0, 0))],
                           [CongruenceConstraint([Term(1, "a"), Term(-1, "b")], (0, 0), 2),
                            CongruenceConstraint([Term(1, "a"), Term(-1, "b", WeylElement([[2, 0], [0, 1]]))],
                                                 (1, 0), 1)])
    report = validate_system(sys)
    assert report.warnings and report.system.constraints[0].order == 0
    assert report.errors == ["constraint 1: twist WeylElement([[2, 0], [0, 1]]) is not unimodular"]


def test_validate_isotropy_must_fix_moment():
    sys = CongruenceSystem(2, [Vertex("a", (1, 0), (WeylElement([[0, 1], [1, 0]]),))])
    assert not validate_system(sys).ok


def test_satisfies_examples():
    sys = two_vertex()
    assert satisfies(sys, {"y": 1, "z": 1}) == (True, None)
    ok, v = satisfies(sys, {"y": 1, "z": 0})
    assert not ok and v.kind == "congruence" and v.index == 0
    conics = build_complete_conics()
    assert satisfies(conics, conics.named("sigma"))[0]
    assert satisfies(conics, {vid: 1 for vid in conics.vertex_ids})[0]


def test_satisfies_invariance_failure():
    conics = build_complete_conics()
    ok, v = satisfies(conics, {"v0": "x1", "v1": "x1", "v2": "x1"})
    assert not ok and v.kind == "invariance" and v.index == 1


def test_satisfies_incomplete_tuple():
    with pytest.raises(ValueError):
        satisfies(two_vertex(), {"y": 1})


def test_constraint_rows_examples():
    one = CongruenceSystem(2, [Vertex("a", (0, 0))])
    assert constraint_rows(one, 1) == []
    sys = two_vertex()
    assert constraint_rows(sys, 0) == [[1, -1]]
    assert constraint_rows(sys, 1) == []


def test_order_two_rows():
    sys = build_fiber_system("PV", (1,))
    # degree 1: only a*x + b*x - 2c*x must vanish mod x^2
    assert constraint_rows(sys, 1) == [[1, 1, -2]]


def _kernel_dim(sys, d):
    from gkmring.poly import monomials
    n = len(monomials(sys.rank, d)) * len(sys.vertices)
    rows = constraint_rows(sys, d)
    return n - (rref_kernel(rows, n)[0] if rows else 0)


def test_rows_invariant_under_modulus_scaling():
    conics = build_complete_conics()
    scaled = CongruenceSystem(conics.rank, conics.vertices,
                              [CongruenceConstraint(c.terms, tuple(3 * x for x in c.modulus), c.order)
                               for c in conics.constraints])
    flipped = negate_moduli(conics)
    for d in range(4):
        k = _kernel_dim(conics, d)
        assert _kernel_dim(scaled, d) == k == _kernel_dim(flipped, d)


def test_change_of_basis_preserves_kernel_dims():
    rng = random.Random(2)
    conics = build_complete_conics()
    for _ in range(2):
        u = random_unimodular(3, rng)
        other = change_lattice_basis(conics, u)
        assert validate_system(other).ok
        assert satisfies(other, other.named("sigma"))[0]
        for d in range(3):
            assert _kernel_dim(other, d) == _kernel_dim(conics, d)
