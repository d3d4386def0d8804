"""Seeded random checks of the standing identities.

Each ``check_*`` function draws one random case from a :class:`random.Random`
and raises ``AssertionError`` with a description when the identity fails.
:func:`run_properties` runs them in bulk (the ``properties`` command); the
test suite drives the same functions from hypothesis-chosen seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import arrays
from .algebra import (AlgHom, FreeAlgebra, MonicPoly, char_poly, make_monogenic, make_product, norm,
                      trivial_algebra)
from .catalog import (an_closure_from_root, cubic_resolvent, d4_closure_from_root, discriminant_algebra,
                      one_closure_from_homs)
from .closure import ClosureDatum, act, enumerate_closure_data, induce, verify_closure_datum
from .ferrand import ferrand_table
from .groups import alternating, compose, cyclic4, dihedral4, symmetric, young
from .matrices import adjugate
from .rings import GF, ZZ, IntegersMod, RingMap
from .roots import find_monic_roots
from .tensors import elementary_invariant, invariant_ring, tensor_algebra

RING_MODULI = (2, 3, 5, 7, 4, 9)
PRIMES = (2, 3, 5, 7)


def random_ring(rng: random.Random):
    m = rng.choice(RING_MODULI)
    return GF(m) if m in PRIMES else IntegersMod(m)


def random_monic(R, n: int, rng: random.Random) -> MonicPoly:
    card = R.cardinality()
    return MonicPoly.from_coeffs(R, [rng.randrange(card) for _ in range(n)] + [1])


def change_basis(A: FreeAlgebra, P) -> FreeAlgebra:
    """The same algebra on the basis ``b_i = Σ_j P[i][j] θ_j`` (``P`` invertible)."""
    R = A.ring
    n = A.rank
    P = arrays.from_elems(R, [[R(x) for x in row] for row in P])
    adj = adjugate([[arrays.lift(R, P[i, j]) for j in range(n)] for i in range(n)], R)
    det = sum((arrays.lift(R, P[0, j]) * adj[j][0] for j in range(n)), R.zero)
    inv_det = det.inverse()
    Pinv = arrays.from_elems(R, [[adj[i][j] * inv_det for j in range(n)] for i in range(n)])
    prods = A.mul_arrays(P[:, None, :], P[None, :, :])
    struct = arrays.normalize(R, np.tensordot(prods, Pinv, axes=([2], [0])))
    unit = arrays.normalize(R, A.unit @ Pinv)
    return FreeAlgebra(R, struct, unit, names=[f"b{i}" for i in range(n)])


def random_unimodular(n: int, rng: random.Random, entries=range(-2, 3)):
    """A product of a unit lower and a unit upper triangular integer matrix."""
    L = [[1 if i == j else (rng.choice(entries) if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[1 if i == j else (rng.choice(entries) if j > i else 0) for j in range(n)] for i in range(n)]
    return [[sum(L[i][k] * U[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def random_algebra(R, n: int, rng: random.Random) -> FreeAlgebra:
    """Monogenic, a product of two monogenic factors, or either on a scrambled basis."""
    kind = rng.random()
    if n >= 2 and kind < 0.25:
        k = rng.randrange(1, n)
        A = make_product(make_monogenic(R, random_monic(R, k, rng)),
                         make_monogenic(R, random_monic(R, n - k, rng)))[0]
    else:
        A = make_monogenic(R, random_monic(R, n, rng))
    if rng.random() < 0.4:
        A = change_basis(A, random_unimodular(n, rng, range(R.cardinality())))
    return A


def random_element(A: FreeAlgebra, rng: random.Random):
    card = A.ring.cardinality()
    return A.element([rng.randrange(card) for _ in range(A.rank)])


def _case(rng, ranks=(2, 3, 4)):
    R = random_ring(rng)
    n = rng.choice(ranks)
    return R, random_algebra(R, n, rng)


# --- the identities ------------------------------------------------------------------------------

def check_elementary(rng: random.Random):
    """``Φ(e_k(a)) = s_k(a)`` for every ``k``."""
    R, A = _case(rng)
    a = random_element(A, rng)
    phi = ClosureDatum.ferrand(A)
    s = char_poly(a).s
    for k in range(1, A.rank + 1):
        got = phi(elementary_invariant(a, k))
        assert got == s[k - 1], f"{A} over {R}: Φ(e_{k}({a})) = {got}, s_{k} = {s[k - 1]}"


def check_norm(rng: random.Random):
    """``Φ(a^{⊗n}) = N(a)``, with the pure tensor expanded directly."""
    R, A = _case(rng)
    a = random_element(A, rng)
    n = A.rank
    inv = invariant_ring(A, symmetric(n))
    t = tensor_algebra(A).pure([a] * n)
    got = ClosureDatum.ferrand(A)(inv.coords_of(t))
    assert got == norm(a), f"{A} over {R}: Φ({a}^⊗{n}) = {got}, N = {norm(a)}"


def check_cayley_hamilton(rng: random.Random):
    """``χ_a(a) = 0``."""
    R, A = _case(rng)
    a = random_element(A, rng)
    cs = char_poly(a).coeffs()
    acc = A.zero
    for c in reversed(cs):
        acc = acc * a + A.one * c
    assert arrays.is_zero_array(R, acc.coords), f"{A} over {R}: χ_{a}({a}) = {acc}"


def check_ferrand_base_change(rng: random.Random):
    """The Ferrand table over ``Z`` reduces to the table over ``GF(p)``."""
    p = rng.choice(PRIMES)
    n = rng.choice((2, 3, 4))
    coeffs = [rng.randint(-6, 6) for _ in range(n)] + [1]
    A = make_monogenic(ZZ, MonicPoly.from_coeffs(ZZ, coeffs))
    if rng.random() < 0.4:
        A = change_basis(A, random_unimodular(n, rng))
    f = RingMap(ZZ, GF(p))
    Ap = A.base_change(f)
    want = ferrand_table(Ap).table
    got = [f(v) for v in ferrand_table(A).table]
    assert got == want, f"Ferrand table of {A} does not reduce mod {p}"


def check_canonical_verifies(rng: random.Random):
    """The ``S_n`` datum given by the Ferrand table is a closure datum."""
    R, A = _case(rng)
    v = verify_closure_datum(ClosureDatum.ferrand(A))
    assert v.ok, f"{A} over {R}: canonical datum fails {v.law}: {v.message}"


def _split_data(R, n, rng):
    """A trivial-group datum on ``R^n`` from a random ordering of the projections."""
    A = trivial_algebra(R, n)
    order = list(range(n))
    rng.shuffle(order)
    homs = []
    for j in order:
        imgs = arrays.zeros(R, (n, 1))
        imgs[j, 0] = arrays.lower(R, 1)
        homs.append(AlgHom(A, R, imgs))
    return one_closure_from_homs(homs, check=False)


def _random_perm(n, rng):
    s = list(range(n))
    rng.shuffle(s)
    return tuple(s)


def check_functoriality(rng: random.Random):
    """``act`` is an action, commutes with ``induce``, and ``induce`` is transitive."""
    R = random_ring(rng)
    n = rng.choice((2, 3, 4))
    phi = _split_data(R, n, rng)
    mids = [alternating(n), young([1] * (n - 2) + [2]) if n > 2 else symmetric(2)]
    if n == 4:
        mids += [cyclic4(), dihedral4(), young([2, 2])]
    H = rng.choice(mids)
    K = symmetric(n)
    s, t = _random_perm(n, rng), _random_perm(n, rng)
    assert act(s, act(t, phi)) == act(compose(s, t), phi), "act is not an action"
    assert induce(induce(phi, H), K) == induce(phi, K), f"inducing through {H} changes the result"
    assert induce(phi, phi.group) == phi, "inducing to the same group is not the identity"
    lhs = act(s, induce(phi, H))
    rhs = induce(act(s, phi), H.conjugate(s))
    assert lhs == rhs, f"act and induce do not commute for {H}"
    for psi in (induce(phi, H), lhs):
        v = verify_closure_datum(psi)
        assert v.ok, f"induced datum fails {v.law}"


def check_an_count(rng: random.Random):
    """A_n data found by the resolvent search match the roots of the discriminant quadratic."""
    R, A = _case(rng)
    G = alternating(A.rank)
    oracle = enumerate_closure_data(A, G)
    roots = find_monic_roots(discriminant_algebra(A).quadratic)
    assert len(oracle) == len(roots), f"{A} over {R}: {len(oracle)} data, {len(roots)} roots"
    built = {an_closure_from_root(A, r, check=False) for r in roots}
    assert built == set(oracle), f"{A} over {R}: root data differ from enumerated data"


def check_d4_count(rng: random.Random):
    """D4 data found by the resolvent search match the roots of the cubic resolvent."""
    R = random_ring(rng)
    A = make_monogenic(R, random_monic(R, 4, rng))
    oracle = enumerate_closure_data(A, dihedral4())
    roots = find_monic_roots(cubic_resolvent(A.poly))
    assert len(oracle) == len(roots), f"{A} over {R}: {len(oracle)} data, {len(roots)} roots"
    built = {d4_closure_from_root(A, r, check=False) for r in roots}
    assert built == set(oracle), f"{A} over {R}: root data differ from enumerated data"


PROPERTIES = {
    "elementary": check_elementary,
    "norm": check_norm,
    "cayley-hamilton": check_cayley_hamilton,
    "ferrand-base-change": check_ferrand_base_change,
    "canonical-verifies": check_canonical_verifies,
    "functoriality": check_functoriality,
    "an-count": check_an_count,
    "d4-count": check_d4_count,
}


@dataclass
class PropertyResult:
    name: str
    cases: int
    failures: int
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


def run_property(name: str, seed: int = 0, cases: int = 200) -> PropertyResult:
    check = PROPERTIES[name]
    rng = random.Random(f"{seed}:{name}")
    failures = 0
    first = None
    for _ in range(cases):
        try:
            check(rng)
        except AssertionError as exc:
            failures += 1
            first = first or str(exc)
    return PropertyResult(name, cases, failures, first)


def run_properties(seed: int = 0, cases: int = 200, names=None) -> list:
    names = list(names) if names else list(PROPERTIES)
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(unknown)}; known: {', '.join(PROPERTIES)}")
    return [run_property(n, seed, cases) for n in names]

