"""
D4 closure data of quartic algebras
===================================

D4 data of R[x]/(f) correspond to roots of the cubic resolvent of f. Each
datum is built twice, through the resolvent algebra and through symmetric
functions, and the two must agree. Run with ``python demos/quartic_d4.py``.
"""

from gclosure.algebra import MonicPoly, make_monogenic
from gclosure.catalog import cubic_resolvent, d4_construction
from gclosure.closure import closure_algebra, enumerate_closure_data, resolvent_algebra
from gclosure.groups import dihedral4
from gclosure.quotient import is_faithful
from gclosure.rings import GF, IntegersMod
from gclosure.roots import find_monic_roots
from gclosure.serialize import datum_to_doc

D4 = dihedral4()

for R, text in [(GF(7), "x^4 + 1"), (GF(5), "x^4 - 1"), (IntegersMod(9), "x^4")]:
    A = make_monogenic(R, MonicPoly.parse(R, text))
    m = cubic_resolvent(A.poly)
    roots = sorted(find_monic_roots(m), key=str)
    print(f"{text} over {R}: cubic resolvent {m.format('y')}, roots {[str(r) for r in roots]}")

    # the resolvent algebra has rank 3; maps from it to R are exactly the D4 data
    res = resolvent_algebra(A, D4)
    print(f"  resolvent algebra rank {res.rank}, {len(res.homs())} maps to {R}")

    for rho in roots:
        c = d4_construction(A, rho)
        Q = closure_algebra(c.datum)
        print(f"  root {rho}: routes agree {c.routes_agree}, closure rank {Q.rank}, "
              f"{is_faithful(Q).description}")
    assert set(enumerate_closure_data(A, D4)) == {d4_construction(A, r).datum for r in roots}

# A datum is a plain document that the command-line tool can read back.
A = make_monogenic(GF(7), MonicPoly.parse(GF(7), "x^4 + 1"))
doc = datum_to_doc(d4_construction(A, 2).datum)
print("\nfirst values of the datum for root 2:", dict(list(doc["values"].items())[:4]))
