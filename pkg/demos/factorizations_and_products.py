"""
Intransitive data, factorizations and products
==============================================

For a Young subgroup S_{n1} x ... x S_{nk}, closure data of R[x]/(f) are the
ordered factorizations of f into monic factors of those degrees. Products of
data induce up to larger groups, and their closure algebras split into one
copy per coset. Run with ``python demos/factorizations_and_products.py``.
"""

from gclosure.algebra import MonicPoly, find_algebra_homs, make_monogenic, trivial_algebra
from gclosure.catalog import (FactorizationDatum, factorization_closure, factors_from_datum, monic_factorizations,
                              one_closure_from_homs, stronger_product_check)
from gclosure.closure import ClosureDatum, closure_algebra, enumerate_closure_data
from gclosure.groups import symmetric, young
from gclosure.rings import GF

R = GF(5)
A = make_monogenic(R, MonicPoly.parse(R, "x^4 - 1"))

# x^4 - 1 = (x-1)(x+1)(x-2)(x-3) over GF(5): six ways to split it into two quadratics
print("S2xS2 data of GF(5)[x]/(x^4 - 1):")
for factors in monic_factorizations(A.poly, [2, 2]):
    fd = FactorizationDatum(A.poly, factors)
    phi = factorization_closure(A, fd)
    back = factors_from_datum(phi, [2, 2])
    print("  " + " * ".join(f"({g.format()})" for g in factors),
          "| round trip", back == fd, "| closure rank", closure_algebra(phi).rank)
print("  resolvent search finds", len(enumerate_closure_data(A, young([2, 2]))))

# An irreducible quartic has none.
B = make_monogenic(GF(3), MonicPoly.parse(GF(3), "x^4 + x + 2"))
print("\nGF(3)[x]/(x^4 + x + 2) S1xS3 data:", len(enumerate_closure_data(B, young([1, 3]))))

# Two rank-1 data multiply to an S1xS1 datum on GF(3)^2; inducing to S2 gives
# a closure with one idempotent per coset.
one = ClosureDatum.ferrand(trivial_algebra(GF(3), 1))
check = stronger_product_check([one, one], symmetric(2))
print(f"\ninduced to S2: rank {check.rank} (expected {check.expected_rank}), "
      f"{len(check.idempotents)} coset idempotents, orthogonal and summing to 1: {check.idempotents_ok}")

# Distinct maps A -> R give a trivial-group datum.
C = make_monogenic(R, MonicPoly.parse(R, "x^3 - x"))
phi = one_closure_from_homs(find_algebra_homs(C, R))
print("\ntrivial-group datum from the three roots of x^3 - x:", phi in enumerate_closure_data(C, phi.group))
