"""Discriminant algebras, A_n and D4 data from roots, factorizations and products."""

import pytest

from gclosure.algebra import MonicPoly, disc_of_basis, find_algebra_homs, make_monogenic, make_product, trivial_algebra
from gclosure.catalog import (FactorizationDatum, an_closure_from_root, closure_data, cubic_resolvent,
                              d4_construction, discriminant_algebra, factorization_closure, factors_from_datum,
                              is_benign, monic_factorizations, one_closure_from_homs, product_closure,
                              qrs_decompose, sqrt_disc_correspondence, stronger_product_check,
                              symbolic_an_datum, symmetrize)
from gclosure.closure import ClosureDatum, base_change, enumerate_closure_data, verify_closure_datum
from gclosure.errors import CapabilityError, HomomorphismError, HypothesisError, NotAClosureDatum
from gclosure.groups import alternating, cyclic4, dihedral4, symmetric, trivial, young
from gclosure.polynomials import permute_variables
from gclosure.rings import GF, ZZ, IntegersMod, PolyExt, RingMap, parse_ring
from gclosure.roots import find_monic_roots


def mono(R, text):
    return make_monogenic(R, MonicPoly.parse(R, text))


# --- discriminant algebras and A_n ------------------------------------------------------------------

def test_discriminant_algebra_of_generic_cubic():
    R = parse_ring("Z[a,b]")
    A = mono(R, "x^3 + a*x + b")
    D = discriminant_algebra(A)
    assert D.quadratic == MonicPoly.parse(R, "y^2 - 3*b*y + a^3 + 9*b^2", var="y")
    assert D.discriminant == R.parse("-4*a^3 - 27*b^2") == disc_of_basis(A)


@pytest.mark.parametrize("ring, poly", [(GF(7), "x^3 - x"), (GF(5), "x^4 + x + 1"), (IntegersMod(9), "x^3 + 3*x + 1"),
                                        (ZZ, "x^3 - 7*x + 6")])
def test_discriminant_matches_basis_discriminant(ring, poly):
    A = mono(ring, poly)
    assert discriminant_algebra(A).discriminant == disc_of_basis(A)


def test_an_data_from_roots_match_enumeration():
    A = mono(GF(7), "x^3 - x")
    q = discriminant_algebra(A).quadratic
    built = {an_closure_from_root(A, r) for r in find_monic_roots(q)}
    assert built == set(enumerate_closure_data(A, alternating(3)))
    with pytest.raises(HomomorphismError):
        an_closure_from_root(A, 2)


def test_symbolic_an_datum_specializes():
    # a = -1, b = 0 turns x^3 + a x + b into x^3 - x, and y = 1 is a root of y^2 - 1
    R = parse_ring("Z[a,b]")
    A = mono(R, "x^3 + a*x + b")
    Delta, phi = symbolic_an_datum(A)
    assert verify_closure_datum(phi)
    f = RingMap(Delta, GF(7), {"a": -1, "b": 0, "y": 1})
    psi = base_change(phi, f)
    assert psi == an_closure_from_root(mono(GF(7), "x^3 - x"), 1)


def test_square_root_correspondence_over_gf7():
    A = mono(GF(7), "x^3 - x")
    C = sqrt_disc_correspondence(A)
    assert sorted((int(x.v), int(d.v)) for x, d in C.pairs) == [(1, 2), (6, 5)]
    for x, d in C.pairs:
        assert C.inverse(d) == x and d * d == C.discriminant


def test_square_root_correspondence_over_z9():
    # 2 is a unit mod 9, so every root pairs off even with discriminant 0
    A = mono(IntegersMod(9), "x^3")
    C = sqrt_disc_correspondence(A)
    assert sorted((int(x.v), int(d.v)) for x, d in C.pairs) == [(0, 0), (3, 6), (6, 3)]


def test_square_root_correspondence_needs_primoid_two():
    A = mono(parse_ring("Z[u]/(u^2-5)"), "x^2 - x - 1")
    with pytest.raises(HypothesisError) as info:
        sqrt_disc_correspondence(A, bound=2)
    assert "primoid" in str(info.value)


# --- D4 ------------------------------------------------------------------------------------------

def test_cubic_resolvent_coefficients():
    R = parse_ring("Z[p,q,r]")
    f = MonicPoly.parse(R, "x^4 + p*x^2 + q*x + r")
    assert cubic_resolvent(f) == MonicPoly.parse(R, "y^3 - p*y^2 - 4*r*y + 4*p*r - q^2", var="y")


def test_qrs_decomposition_of_an_invariant():
    P = PolyExt(ZZ, ("x1", "x2", "x3", "x4"))
    x1, x2, x3, x4 = (P.var(i) for i in range(4))
    p = x1 * x1 * x3 * x3 + x2 * x2 * x4 * x4
    q, r, s = qrs_decompose(p)
    L = x1 * x3 + x2 * x4
    assert q * L * L + r * L + s == p
    for poly in (q, r, s):
        assert permute_variables(poly, (1, 0, 2, 3)) == poly
    e = symmetrize(x1 * x2 + x1 * x3 + x1 * x4 + x2 * x3 + x2 * x4 + x3 * x4)
    assert str(e) == "e2"


@pytest.mark.parametrize("ring, poly", [(GF(7), "x^4 + 1"), (GF(5), "x^4 - 1"), (IntegersMod(9), "x^4")])
def test_d4_routes_agree_and_match_enumeration(ring, poly):
    A = mono(ring, poly)
    roots = find_monic_roots(cubic_resolvent(A.poly))
    built = []
    for rho in roots:
        c = d4_construction(A, rho)
        assert c.resolvent_route is not None and c.routes_agree
        built.append(c.datum)
    assert set(built) == set(enumerate_closure_data(A, dihedral4()))


def test_d4_rejects_non_root():
    A = mono(GF(7), "x^4 + 1")
    with pytest.raises(HomomorphismError):
        d4_construction(A, 1)


# --- factorizations and products -------------------------------------------------------------------

def test_factorization_round_trip():
    R = GF(5)
    A = mono(R, "x^4 - 1")
    facts = monic_factorizations(A.poly, [2, 2])
    assert len(facts) == 6
    data = set()
    for factors in facts:
        fd = FactorizationDatum(A.poly, factors)
        phi = factorization_closure(A, fd)
        assert factors_from_datum(phi, [2, 2]) == fd
        data.add(phi)
    assert data == set(enumerate_closure_data(A, young([2, 2])))


def test_factorization_must_multiply_out():
    R = GF(5)
    f = MonicPoly.parse(R, "x^2 - 1")
    with pytest.raises(ValueError):
        FactorizationDatum(f, (MonicPoly.parse(R, "x - 1"), MonicPoly.parse(R, "x - 2")))


def test_irreducible_quartic_has_no_intransitive_data():
    A = mono(GF(3), "x^4 + x + 2")
    for sizes in ([1, 3], [2, 2], [1, 1, 2]):
        assert monic_factorizations(A.poly, sizes) == []
        assert enumerate_closure_data(A, young(sizes)) == []


def test_product_closure_verifies():
    R = GF(5)
    phi = ClosureDatum.ferrand(mono(R, "x^2 + 2"))
    psi = ClosureDatum.ferrand(trivial_algebra(R, 1))
    prod = product_closure([phi, psi])
    assert prod.group == young([2, 1]) and verify_closure_datum(prod)


def test_stronger_product_check_for_split_pair():
    R = GF(3)
    data = [ClosureDatum.ferrand(trivial_algebra(R, 1)), ClosureDatum.ferrand(trivial_algebra(R, 1))]
    res = stronger_product_check(data, symmetric(2))
    assert (res.rank, res.expected_rank, res.index, len(res.idempotents)) == (2, 2, 2, 2)
    assert res.ok


# --- trivial-group data from maps -------------------------------------------------------------------

def test_one_closure_from_distinct_maps():
    A = mono(GF(5), "x^3 - x")
    homs = find_algebra_homs(A, GF(5))
    phi = one_closure_from_homs(homs)
    assert phi in enumerate_closure_data(A, trivial(3))


def test_one_closure_rejects_repeated_map():
    A = mono(GF(3), "x^2 - x")
    h = find_algebra_homs(A, GF(3))[0]
    with pytest.raises(NotAClosureDatum) as info:
        one_closure_from_homs([h, h])
    assert info.value.law == "norm-preserving"


# --- benign pairs and dispatch ----------------------------------------------------------------------

def test_is_benign():
    assert is_benign(GF(5), alternating(3))
    assert is_benign(IntegersMod(9), symmetric(2))
    verdict = is_benign(IntegersMod(9), alternating(3))
    assert verdict.benign is False and "zerodivisor" in verdict.reason


def test_closure_data_dispatch():
    R = parse_ring("Z[a,b]")
    A = mono(R, "x^3 + a*x + b")
    assert closure_data(A, symmetric(3)) == [ClosureDatum.ferrand(A)]
    golden = mono(parse_ring("Z[u]/(u^2-5)"), "x^2 - x - 1")
    assert closure_data(golden, alternating(2)) == []
    B = mono(R, "x^4 + a*x + b")
    with pytest.raises(CapabilityError):
        closure_data(B, cyclic4())


@pytest.mark.parametrize("p, count", [(5, 2), (7, 0)])
def test_closure_data_over_product_algebra(p, count):
    # x^2 + 1 splits mod 5 but not mod 7, so the discriminant is a square only mod 5
    R = GF(p)
    B, _, _ = make_product(mono(R, "x^2 + 1"), trivial_algebra(R, 1))
    assert len(closure_data(B, alternating(3))) == count
