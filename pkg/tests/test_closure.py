"""Closure data, resolvent algebras and closure algebras against brute-force oracles."""

import itertools

import numpy as np
import pytest

from gclosure import arrays
from gclosure.algebra import MonicPoly, make_monogenic, trivial_algebra
from gclosure.closure import (ClosureDatum, act, base_change, closure_algebra, enumerate_closure_data, induce,
                              isomorphic, resolvent_algebra, stabilizer, verify_closure_datum)
from gclosure.errors import CapabilityError, ConsistencyError, GuardError, NotAClosureDatum
from gclosure.ferrand import ferrand_table
from gclosure.groups import alternating, dihedral4, symmetric, trivial
from gclosure.normal_forms import QuotientModule
from gclosure.quotient import (QuotientAlgebra, check_orthogonal_decomposition, idempotents, is_faithful,
                               primitive_idempotents)
from gclosure.rings import GF, ZZ, IntegersMod, RingMap, parse_ring
from gclosure.tensors import TensorAlgebra, invariant_ring, orbit_basis


def mono(R, text):
    return make_monogenic(R, MonicPoly.parse(R, text))


def brute_force_data(A, G):
    """Every value vector satisfying the three laws, found by exhaustive search."""
    R = A.ring
    m = R.cardinality()
    inv = invariant_ring(A, G)
    N = inv.size
    S = np.asarray(inv.struct, dtype=np.int64)
    u = np.asarray(inv.unit, dtype=np.int64)
    F = ferrand_table(A)
    to_s = [F.basis.orbit_index(ob_rep) for ob_rep in (inv.basis.rep_tuple(o) for o in range(N))]
    fer = np.asarray(F.values, dtype=np.int64)
    found = []
    total = m ** N
    chunk = 1 << 16
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        V = np.empty((idx.size, N), dtype=np.int64)
        rest = idx.copy()
        for k in range(N - 1, -1, -1):
            V[:, k] = rest % m
            rest //= m
        ok = (V @ u) % m == 1
        sums = np.zeros((idx.size, F.basis.size), dtype=np.int64)
        for o, s in enumerate(to_s):
            sums[:, s] += V[:, o]
        ok &= np.all(sums % m == fer % m, axis=1)
        for i in range(N):
            for j in range(i, N):
                if not ok.any():
                    break
                ok &= (V[:, i] * V[:, j]) % m == (V @ S[i, j]) % m
        found.extend(tuple(int(x) for x in V[c]) for c in np.flatnonzero(ok))
    return sorted(found)


@pytest.mark.parametrize("ring, poly, group", [
    (GF(2), "x^3+x+1", alternating(3)),
    (GF(2), "x^2+x+1", trivial(2)),
    (GF(3), "x^2-1", trivial(2)),
    (IntegersMod(4), "x^2", trivial(2)),
    (GF(3), "x^3-x", alternating(3)),
    (GF(2), "x^3+x", alternating(3)),
])
def test_enumeration_matches_exhaustive_search(ring, poly, group):
    A = mono(ring, poly)
    got = sorted(tuple(int(x) for x in phi.values) for phi in enumerate_closure_data(A, group))
    assert got == brute_force_data(A, group)


def test_ferrand_datum_verifies_and_is_unique_sn_datum():
    R = IntegersMod(9)
    A = mono(R, "x^3+3*x+1")
    phi = ClosureDatum.ferrand(A)
    assert verify_closure_datum(phi)
    assert enumerate_closure_data(A, symmetric(3)) == [phi]


def test_verify_names_the_failing_law():
    R = GF(7)
    A = mono(R, "x^4+1")
    phi = enumerate_closure_data(A, dihedral4())[0]
    vals = phi.values.copy()
    o = phi.basis.label_index("(1,2,1,2)")
    vals[o] = (vals[o] + 1) % 7
    bad = verify_closure_datum(ClosureDatum(A, phi.group, vals))
    assert not bad and bad.law == "restriction"
    vals[0] = 0
    bad = verify_closure_datum(ClosureDatum(A, phi.group, vals))
    assert bad.law == "unit"
    with pytest.raises(NotAClosureDatum):
        verify_closure_datum(ClosureDatum(A, phi.group, vals), raise_on_failure=True)


def test_multiplicativity_failure_is_reported():
    # moving mass between the two A3 orbits over one S3 orbit keeps restriction but breaks products
    R = GF(5)
    A = trivial_algebra(R, 3)
    phi = enumerate_closure_data(A, alternating(3))[0]
    ob = phi.basis
    a, b = ob.label_index("(1,2,3)"), ob.label_index("(1,3,2)")
    vals = phi.values.copy()
    vals[a], vals[b] = (vals[a] + 2) % 5, (vals[b] - 2) % 5
    bad = verify_closure_datum(ClosureDatum(A, phi.group, vals))
    assert bad.law == "multiplicativity" and len(bad.where) == 2


def test_act_and_induce():
    R = GF(5)
    A = trivial_algebra(R, 3)
    data = enumerate_closure_data(A, alternating(3))
    assert len(data) == 2
    phi, psi = data
    # the odd permutations swap the two A3 data, even ones fix them
    assert isomorphic(phi, psi) is not None
    assert act((1, 0, 2), phi) == psi
    assert sorted(stabilizer(phi)) == sorted(alternating(3).elements)
    assert induce(phi, symmetric(3)) == ClosureDatum.ferrand(A)


def test_base_change_of_data_commutes_with_verification():
    R = ZZ
    A = mono(R, "x^3 - x")
    phi = ClosureDatum.ferrand(A)
    f = RingMap(ZZ, GF(3))
    psi = base_change(phi, f)
    assert verify_closure_datum(psi)
    assert psi == ClosureDatum.ferrand(A.base_change(f))


def test_resolvent_of_d4_over_gf7():
    A = mono(GF(7), "x^4+1")
    res = resolvent_algebra(A, dihedral4())
    assert res.rank == 3 and res.quotient.is_free
    assert len(res.homs()) == 3


def test_resolvent_needs_linear_algebra():
    A = mono(parse_ring("Z[a,b]"), "x^3+a*x+b")
    with pytest.raises(CapabilityError):
        resolvent_algebra(A, alternating(3))


# --- closure algebras --------------------------------------------------------------------------

def saturated_closure(phi):
    """The ideal generated by ``e_O - φ(e_O)`` grown by single generator products until stable."""
    A = phi.algebra
    R = A.ring
    T = TensorAlgebra(A)
    ob = orbit_basis(phi.group, A.rank)
    rows = arrays.zeros(R, (ob.size, T.dim))
    one = arrays.lower(R, 1)
    for k, o in enumerate(ob.orbit_of):
        rows[o, k] = one
    rows = arrays.normalize(R, rows - np.multiply.outer(phi.values, T.unit))
    span = QuotientModule.from_relations(R, rows, T.dim)
    while True:
        prods = T.generator_products(span.echelon).reshape(-1, T.dim)
        bigger = QuotientModule.from_relations(R, np.concatenate([span.echelon, prods.astype(span.echelon.dtype)]),
                                               T.dim)
        if sorted(bigger.orders) == sorted(span.orders):
            return bigger
        span = bigger


@pytest.mark.parametrize("ring, poly, group", [
    (GF(2), "x^3+x+1", alternating(3)),
    (IntegersMod(9), "x^3", alternating(3)),
    (GF(5), "x^3-x", alternating(3)),
    (GF(3), "x^2+1", symmetric(2)),
    (IntegersMod(4), "x^3+x+1", symmetric(3)),
    (GF(7), "x^4+1", dihedral4()),
])
def test_closure_algebra_matches_saturated_ideal(ring, poly, group):
    A = mono(ring, poly)
    for phi in enumerate_closure_data(A, group):
        Q = closure_algebra(phi)
        oracle = saturated_closure(phi)
        assert sorted(Q.orders) == sorted(oracle.orders)


def test_closure_algebra_of_etale_algebra_has_rank_order_of_group():
    A = mono(GF(7), "x^4+1")
    for phi in enumerate_closure_data(A, dihedral4()):
        Q = closure_algebra(phi)
        assert Q.rank == 8 and Q.is_free and is_faithful(Q)


def test_closure_algebra_guard():
    A = mono(GF(2), "x^5+x^2+1")
    with pytest.raises(GuardError) as info:
        closure_algebra(ClosureDatum.ferrand(A))
    assert info.value.limit == 4


def test_idempotents_of_split_closure():
    A = trivial_algebra(GF(3), 2)
    Q = closure_algebra(ClosureDatum.ferrand(A))
    assert Q.rank == 2
    prim = primitive_idempotents(Q)
    assert len(prim) == 2 and check_orthogonal_decomposition(Q, prim)
    assert len(idempotents(Q)) == 4


def test_faithfulness_over_z9():
    A = mono(IntegersMod(9), "x^3")
    verdicts = {}
    for phi in enumerate_closure_data(A, alternating(3)):
        Q = closure_algebra(phi)
        f = is_faithful(Q)
        verdicts[str(phi["(1,2,3)"])] = (f.faithful, str(f.kernel) if f.kernel is not None else None)
    # values of e_(1,2,3) for the data from the roots 0, 3, 6 of y^2
    assert verdicts == {"0": (True, None), "3": (False, "3"), "6": (False, "3")}


def test_quotient_algebra_rejects_non_ideal():
    A = mono(GF(3), "x^2+1")
    T = TensorAlgebra(A)
    row = arrays.zeros(GF(3), (1, T.dim))
    row[0, 1] = 1
    with pytest.raises(ConsistencyError):
        QuotientAlgebra(T, row)


def test_closure_algebra_product_is_associative():
    A = mono(IntegersMod(9), "x^3")
    phi = enumerate_closure_data(A, alternating(3))[1]
    Q = closure_algebra(phi)
    gens = [Q.basis(i) for i in range(Q.rank)]
    for a, b, c in itertools.product(gens[:3], repeat=3):
        assert (Q.mul_arrays(Q.mul_arrays(a, b), c) == Q.mul_arrays(a, Q.mul_arrays(b, c))).all()
