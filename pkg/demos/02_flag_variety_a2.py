"""Coadjoint orbits of SU(3) from root data.

The regular orbit (the full flag variety) has six fixed points and nine
congruences.  The orbit through a fundamental weight is the projective
plane.  Weights are written in fundamental-weight coordinates.
"""
from gkmring import build_coadjoint_orbit, hilbert_series, minimal_generators, root_system
from gkmring.ring import ordinary_betti, trim

rs = root_system("A2")
print("simple roots:", rs.simple_roots)
print("positive roots:", rs.positive_roots)
print("Weyl group order:", rs.weyl_group.order)

for lam in [(1, 1), (1, 0)]:
    system = build_coadjoint_orbit(rs, lam)
    print(f"\norbit through {lam}: {len(system.vertices)} fixed points, "
          f"{len(system.constraints)} congruences")
    for v in system.vertices:
        print(f"  {v.id}: moment {v.moment}")
    print("  graded dimensions:", hilbert_series(system, 6).dims)
    gens, verdict = minimal_generators(system, 6)
    print("  generator degrees:", [2 * d for d in gens.degrees])
    print("  freeness:", verdict.message())
    print("  Betti numbers:", trim(ordinary_betti(system, 6)))

for name in ["B2", "G2"]:
    system = build_coadjoint_orbit(root_system(name), (1, 1))
    print(f"\n{name} regular orbit Betti numbers:", trim(ordinary_betti(system, 8)))
