"""Groups, algebras, tensor powers and the Ferrand table."""

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gclosure import arrays
from gclosure.algebra import (AlgHom, MonicPoly, char_poly, disc_of_basis, find_algebra_homs,
                              is_universally_norm_preserving, make_monogenic, make_product, norm, trace,
                              trivial_algebra)
from gclosure.errors import GuardError, NotInvariantError, ParseError
from gclosure.ferrand import ferrand_table
from gclosure.groups import (alternating, block_product, block_restriction, cyclic4, dihedral4, klein4,
                             parse_group, symmetric, to_cycles, young)
from gclosure.rings import GF, ZZ, IntegersMod, parse_ring
from gclosure.tensors import (check_tensor_guard, elementary_invariant, gamma, invariant_ring, orbit_basis,
                              perm_action, tensor_algebra)


# --- groups ---------------------------------------------------------------------------------------

@pytest.mark.parametrize("text, order", [("S4", 24), ("A4", 12), ("D4", 8), ("C4", 4), ("V4", 4),
                                         ("S2xS2", 4), ("S1xS3", 6), ("A3", 3), ("S1", 1)])
def test_group_orders(text, order):
    assert parse_group(text).order == order


def test_group_from_cycles_and_trivial():
    G = parse_group("[(1,2)(3,4),(1,3)]", degree=4)
    assert G == dihedral4()
    assert parse_group("1", degree=3).order == 1
    with pytest.raises(ParseError):
        parse_group("1")
    with pytest.raises(ParseError):
        parse_group("S3", degree=4)


def test_dihedral_group_preserves_the_square():
    # edges of the square 1-2-3-4 (0-based 0-1-2-3) are permuted among themselves
    edges = {frozenset(e) for e in [(0, 1), (1, 2), (2, 3), (3, 0)]}
    for g in dihedral4().elements:
        assert {frozenset(g[i] for i in e) for e in edges} == edges


def test_subgroup_lattice():
    assert klein4() <= dihedral4() <= symmetric(4)
    assert cyclic4() <= dihedral4()
    assert alternating(4).index_in(symmetric(4)) == 2
    assert young([2, 2]).is_subgroup_of(symmetric(4)) and not young([2, 2]) <= dihedral4()


def test_block_product_and_restriction():
    G = block_product([symmetric(2), symmetric(1)])
    assert G.order == 2 and str(G) == "S2xS1"
    assert block_restriction(symmetric(3), 0, 2) == symmetric(2)


def test_cycle_notation_round_trip():
    s = (1, 2, 0, 3)
    assert to_cycles(s) == [(1, 2, 3)]


def n_cycles(g):
    """Cycles of a permutation, counting fixed points."""
    seen, count = set(), 0
    for i in range(len(g)):
        if i not in seen:
            count += 1
            while i not in seen:
                seen.add(i)
                i = g[i]
    return count


@pytest.mark.parametrize("G", [symmetric(3), alternating(3), dihedral4(), cyclic4(), young([2, 2]), klein4()])
@pytest.mark.parametrize("rank", [2, 3])
def test_orbit_count_matches_burnside(G, rank):
    ob = orbit_basis(G, rank)
    fixed = sum(rank ** n_cycles(g) for g in G.elements)
    assert ob.size * G.order == fixed
    assert int(ob.sizes.sum()) == rank ** G.degree


def test_orbit_labels_round_trip():
    ob = orbit_basis(alternating(3), 3)
    for o in range(ob.size):
        assert ob.label_index(ob.rep_label(o)) == o
    assert ob.label_index("(2,3,1)") == ob.label_index("(1,2,3)")
    assert ob.label_index("(2,1,3)") != ob.label_index("(1,2,3)")


# --- algebras -------------------------------------------------------------------------------------

def test_monogenic_algebra_relations():
    R = GF(7)
    A = make_monogenic(R, MonicPoly.parse(R, "x^4+1"))
    x = A.gen()
    assert x ** 4 + A.one == A.zero
    assert char_poly(x) == A.poly


def test_disc_of_basis_of_quadratic():
    R = parse_ring("Z[a,b]")
    A = make_monogenic(R, MonicPoly.parse(R, "x^2 + a*x + b"))
    assert disc_of_basis(A) == R.parse("a^2 - 4*b")


def test_product_algebra_idempotents_and_norm():
    R = GF(5)
    A1 = make_monogenic(R, MonicPoly.parse(R, "x^2+2"))
    A2 = trivial_algebra(R, 1)
    B, projections, idems = make_product(A1, A2)
    assert B.rank == 3
    e1, e2 = idems
    assert e1 * e1 == e1 and e1 * e2 == B.zero and e1 + e2 == B.one
    a = B.element([1, 2, 3])
    assert norm(a) == norm(A1.element([1, 2])) * R(3)
    assert trace(a) == trace(A1.element([1, 2])) + R(3)


def test_homs_from_split_algebra():
    R = GF(3)
    A = make_monogenic(R, MonicPoly.parse(R, "x^3 - x"))
    homs = find_algebra_homs(A, R)
    assert len(homs) == 3
    F = AlgHom(A, trivial_algebra(R, 3), np.stack([np.asarray(h.images)[:, 0] for h in homs], axis=1))
    assert is_universally_norm_preserving(F)


def test_norm_preservation_rejects_repeated_map():
    R = GF(3)
    A = make_monogenic(R, MonicPoly.parse(R, "x^2 - x"))
    h = find_algebra_homs(A, R)[0]
    cols = np.asarray(h.images)[:, 0]
    F = AlgHom(A, trivial_algebra(R, 2), np.stack([cols, cols], axis=1))
    assert not is_universally_norm_preserving(F)


# --- tensors --------------------------------------------------------------------------------------

def test_tensor_guard():
    check_tensor_guard(4, 4)
    with pytest.raises(GuardError):
        check_tensor_guard(6, 6)
    with pytest.raises(GuardError) as info:
        check_tensor_guard(3, 3, guard_n=2)
    assert info.value.limit == 2


def test_permutation_action_is_left_action():
    R = GF(5)
    A = make_monogenic(R, MonicPoly.parse(R, "x^3+x+1"))
    T = tensor_algebra(A)
    t = T.pure([A.gen(), A.one, A.gen() * A.gen()])
    s, u = (1, 2, 0), (1, 0, 2)
    su = tuple(s[u[i]] for i in range(3))
    assert perm_action(s, perm_action(u, t)) == perm_action(su, t)


def test_invariant_ring_multiplication_matches_tensors():
    R = IntegersMod(4)
    A = make_monogenic(R, MonicPoly.parse(R, "x^3+x+1"))
    inv = invariant_ring(A, alternating(3))
    for o1, o2 in itertools.product(range(0, inv.size, 3), range(1, inv.size, 4)):
        a, b = inv.orbit_sum(o1), inv.orbit_sum(o2)
        assert (a * b).expand() == a.expand() * b.expand()


def test_non_invariant_tensor_is_rejected():
    R = GF(3)
    A = make_monogenic(R, MonicPoly.parse(R, "x^2+1"))
    inv = invariant_ring(A, symmetric(2))
    with pytest.raises(NotInvariantError):
        inv.coords_of(tensor_algebra(A).pure([A.one, A.gen()]))


def test_gamma_pair_is_swapped_by_odd_permutation():
    R = ZZ
    A = make_monogenic(R, MonicPoly.parse(R, "x^3+2*x+1"))
    g, g12 = gamma([A.basis(i) for i in range(3)])
    assert g != g12
    assert perm_action((1, 0, 2), g.expand()) == g12.expand()


# --- Ferrand table --------------------------------------------------------------------------------

def test_ferrand_rank_two_values():
    # A = R[x]/(x^2 - s1 x + s2): Φ(1⊗1) = 1, Φ(1⊗x + x⊗1) = s1, Φ(x⊗x) = s2
    R = parse_ring("Z[s,t]")
    A = make_monogenic(R, MonicPoly(R, (R.var(0), R.var(1))))
    F = ferrand_table(A)
    assert F.rows() == [("(1,1)", R.one), ("(1,2)", R.var(0)), ("(2,2)", R.var(1))]


def test_ferrand_on_elementary_tensors_symbolic():
    R = parse_ring("Z[a,b]")
    A = make_monogenic(R, MonicPoly.parse(R, "x^3 + a*x + b"))
    F = ferrand_table(A)
    a = A.element([R.one, R.var(0), R.one])
    s = char_poly(a).s
    for k in (1, 2, 3):
        assert F(elementary_invariant(a, k)) == s[k - 1]


@given(st.sampled_from([2, 3, 5, 7, 4, 9]), st.lists(st.integers(0, 8), min_size=3, max_size=3),
       st.lists(st.integers(0, 8), min_size=3, max_size=3))
def test_ferrand_norm_identity_rank3(m, coeffs, elem):
    R = IntegersMod(m)
    A = make_monogenic(R, MonicPoly.from_coeffs(R, coeffs + [1]))
    a = A.element(elem)
    inv = invariant_ring(A, symmetric(3))
    t = tensor_algebra(A).pure([a, a, a])
    got = arrays.lift(R, np.dot(inv.coords_of(t), ferrand_table(A).values) % m)
    assert got == norm(a)
