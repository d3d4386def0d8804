"""
Discriminant algebras and A_n closure data
==========================================

An A_n closure datum is a map out of the discriminant algebra, so counting
them means counting roots of one quadratic. Run with ``python demos/discriminant_algebras.py``.
"""

from gclosure.algebra import MonicPoly, disc_of_basis, make_monogenic
from gclosure.catalog import discriminant_algebra, sqrt_disc_correspondence, symbolic_an_datum
from gclosure.closure import closure_algebra, enumerate_closure_data
from gclosure.errors import HypothesisError
from gclosure.groups import alternating, trivial
from gclosure.quotient import is_faithful
from gclosure.rings import GF, IntegersMod, parse_ring
from gclosure.roots import find_monic_roots, is_primoid


def mono(R, text):
    return make_monogenic(R, MonicPoly.parse(R, text))


# The generic cubic over Z[a,b]: the quadratic has discriminant -4a^3 - 27b^2.
R = parse_ring("Z[a,b]")
A = mono(R, "x^3 + a*x + b")
D = discriminant_algebra(A)
print("generic cubic:", D.quadratic.format("y"))
print("  its discriminant:", D.discriminant, "| disc of basis:", disc_of_basis(A))

# The same quadratic with coefficients in Δ itself carries a universal datum.
Delta, phi = symbolic_an_datum(A)
print("  universal datum lives over", Delta)

# F8 over F2 is Galois with cyclic group, so there are two A3 data.
A = mono(GF(2), "x^3 + x + 1")
q = discriminant_algebra(A).quadratic
print("\nF8/F2:", q.format("y"), "roots", sorted(str(r) for r in find_monic_roots(q)))
for phi in enumerate_closure_data(A, alternating(3)):
    print("  datum with closure rank", closure_algebra(phi).rank)

# F4 over F2 has discriminant 1, a square, yet no trivial-group data at all.
A = mono(GF(2), "x^2 + x + 1")
print("\nF4/F2: disc =", disc_of_basis(A), "| trivial-group data:", len(enumerate_closure_data(A, trivial(2))))

# Roots of the quadratic and square roots of the discriminant only match up
# when 2 is primoid. Over Z[u]/(u^2-5) it is not, and the same gap appears.
R = parse_ring("Z[u]/(u^2-5)")
A = mono(R, "x^2 - x - 1")
print("\ngolden ratio: disc =", discriminant_algebra(A).discriminant, "and u^2 =", R.gen * R.gen)
res = is_primoid(R(2), bound=2)
a, b = res.witness
print(f"  2 primoid? {res.is_primoid}: ({a})*({b}) = {a * b}")
try:
    sqrt_disc_correspondence(A, bound=2)
except HypothesisError as exc:
    print("  square-root correspondence refused:", exc)

# Over Z/9 the data from the roots 3 and 6 of y^2 have closures that kill 3.
A = mono(IntegersMod(9), "x^3")
print("\nZ/9, x^3:")
for phi in enumerate_closure_data(A, alternating(3)):
    f = is_faithful(closure_algebra(phi))
    print(f"  e_(1,2,3) -> {phi['(1,2,3)']}: {f.description}")
