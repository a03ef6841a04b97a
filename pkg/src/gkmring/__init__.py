"""Exact computations in congruence-defined subalgebras of products of
polynomial rings (torus-equivariant cohomology via fixed points).
"""
from .builders import (RootSystemData, SegmentSpec, build_coadjoint_orbit, build_complete_conics,
                       build_fiber_case, build_fiber_system, build_multiplicity_free, root_system)
from .errors import (GroupActionMismatch, GroupTooLarge, NotInSpan, NotPrimitive, ParseError,
                     UnknownVariable, ZeroWeight)
from .gkm import (ClassTuple, CongruenceConstraint, CongruenceSystem, Term, Vertex,
                  constraint_rows, satisfies, validate_system)
from .lattice import (FiniteMatrixGroup, WeylElement, extend_to_unimodular_basis, generate_group,
                      molien_series, orbit_with_stabilizer, primitive_part)
from .linalg import intersect_spans, rref_kernel
from .poly import Polynomial, divisibility_order, invariant_basis, parse_polynomial, weyl_apply
from .ring import (graded_basis, hilbert_series, minimal_generators, module_coordinates,
                   ordinary_betti, structure_constants)

__version__ = "0.1.0"

__all__ = [
    "RootSystemData",
    "SegmentSpec",
    "build_coadjoint_orbit",
    "build_complete_conics",
    "build_fiber_case",
    "build_fiber_system",
    "build_multiplicity_free",
    "root_system",
    "GroupActionMismatch",
    "GroupTooLarge",
    "NotInSpan",
    "NotPrimitive",
    "ParseError",
    "UnknownVariable",
    "ZeroWeight",
    "ClassTuple",
    "CongruenceConstraint",
    "CongruenceSystem",
    "Term",
    "Vertex",
    "constraint_rows",
    "satisfies",
    "validate_system",
    "FiniteMatrixGroup",
    "WeylElement",
    "extend_to_unimodular_basis",
    "generate_group",
    "molien_series",
    "orbit_with_stabilizer",
    "primitive_part",
    "intersect_spans",
    "rref_kernel",
    "Polynomial",
    "divisibility_order",
    "invariant_basis",
    "parse_polynomial",
    "weyl_apply",
    "graded_basis",
    "hilbert_series",
    "minimal_generators",
    "module_coordinates",
    "ordinary_betti",
    "structure_constants",
]
