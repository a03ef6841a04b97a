"""The projective line as a two-vertex congruence system.

Two fixed points carry polynomials f_y, f_z in one variable, subject to
f_y = f_z mod x1.  We build the system by hand, list its graded pieces,
find module generators and read off the Betti numbers 1, 1.
"""
from gkmring import (CongruenceConstraint, CongruenceSystem, Term, Vertex, graded_basis,
                     hilbert_series, minimal_generators, module_coordinates, ordinary_betti,
                     parse_polynomial, satisfies)
from gkmring.ring import structure_constants, trim


def show(c):
    return "(" + ", ".join(str(p) for p in c.values()) + ")"


system = CongruenceSystem(
    rank=1,
    vertices=[Vertex("y", (1,)), Vertex("z", (-1,))],
    constraints=[CongruenceConstraint((Term(1, "y"), Term(-1, "z")), (1,), 1)],
    named_classes={"sigma": {"y": parse_polynomial("x1", 1), "z": parse_polynomial("-x1", 1)}},
)

print("graded dimensions d = 0..5:", hilbert_series(system, 5).dims)
for d in range(3):
    print(f"  basis in degree {2 * d}:", [show(c) for c in graded_basis(system, d)])

gens, verdict = minimal_generators(system, 6)
print("\ngenerators:")
for d, c in gens.generators:
    print(f"  degree {2 * d}: {show(c)}")
print("freeness:", verdict.message())

sigma = system.named("sigma")
print("\nsigma satisfies the congruence:", satisfies(system, sigma)[0])
print("sigma in the generators:", [str(f) for f in module_coordinates(system, gens, sigma)])

table = structure_constants(system, gens, 6)
print("e1 * e1 =", [str(f) for f in table[(1, 1)]], "(coordinates in e0, e1)")

print("\nBetti numbers:", trim(ordinary_betti(system, 6)))

bad = system.make_class({"y": parse_polynomial("1", 1), "z": parse_polynomial("0", 1)})
ok, violation = satisfies(system, bad)
print("(1, 0) is rejected:", not ok, "-", violation.detail)
