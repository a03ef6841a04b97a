"""Fiber templates, including order-two congruences.

A two-vertex fixed component contributes one congruence of order one.  The
four- and three-vertex templates add one congruence of order two.  Here
each template is used alone, with modulus x1 in rank 1 and (1,-1) in rank 2.
"""
import random

from gkmring import build_fiber_system, hilbert_series
from gkmring.gkm import change_lattice_basis, validate_system
from gkmring.lattice import random_unimodular
from gkmring.ring import ordinary_betti, trim

for case in ["P1", "Ruled", "PV"]:
    for chi in [(1,), (1, -1)]:
        system = build_fiber_system(case, chi)
        print(f"{case:5s} chi={chi}: dims {hilbert_series(system, 5).dims}, "
              f"Betti {trim(ordinary_betti(system, 8))}")
        for c in system.constraints:
            print(f"      {[(str(t.coeff), t.vertex) for t in c.terms]} mod {c.modulus}^{c.order}")

# the graded dimensions do not depend on the choice of lattice basis
rng = random.Random(1)
system = build_fiber_system("Ruled", (1, -1))
u = random_unimodular(2, rng)
moved = validate_system(change_lattice_basis(system, u)).system
print("\nafter a change of basis", u, "the moduli become",
      [c.modulus for c in moved.constraints])
print("dims before:", hilbert_series(system, 5).dims, "after:", hilbert_series(moved, 5).dims)
