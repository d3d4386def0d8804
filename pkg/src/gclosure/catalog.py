"""Explicit parameterizations of closure data.

* ``A_n``: the discriminant algebra ``R[y]/(q)`` and data from roots of ``q``,
  plus the square-root-of-discriminant correspondence when ``2`` is a primoid
  non-zerodivisor.
* ``D_4`` (monogenic quartics): data from roots of the cubic resolvent, built
  twice (through the resolvent algebra and through symmetric functions).
* ``S_{n_1} × ... × S_{n_k}`` (monogenic): data from monic factorizations.
* Products of data on products of algebras, and 1-closures from maps to ``R``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from . import arrays
from .algebra import (AlgHom, FreeAlgebra, MonicPoly, char_poly,
                      is_universally_norm_preserving, make_monogenic, make_product, trivial_algebra)
from .closure import (ClosureDatum, ResolventAlgebra, closure_algebra, coarsening, enumerate_closure_data,
                      induce, pullback, resolvent_algebra, verify_closure_datum)
from .errors import (CapabilityError, ConsistencyError, DimensionError, DivisibilityError, HomomorphismError,
                     HypothesisError, NotAClosureDatum, NotInvariantError)
from .ferrand import ferrand_table
from .groups import (PermGroup, alternating, block_product, block_restriction, compose, dihedral4, symmetric,
                     young)
from .matrices import adjugate, determinant
from .polynomials import permute_variables, poly_exact_divide
from .quotient import QuotientAlgebra, _is_hom_vector
from .rings import ZZ, Integers, PolyExt, QuotExt, Ring, RingElem, RingMap
from .roots import find_monic_roots, is_primoid
from .tensors import TensorAlgebra, gamma, invariant_ring, orbit_basis, transport_orbits

PRIMOID_SEARCH_BOUND = 4


# --- small ring helpers --------------------------------------------------------------------

def exact_quotient(x: RingElem, d: RingElem) -> RingElem:
    """``y`` with ``y * d == x``; raises :class:`DivisibilityError` otherwise."""
    R = x.ring
    d = R(d)
    if d.is_zero():
        raise DivisibilityError("division by zero")
    if R.is_field:
        return x * d.inverse()
    if isinstance(R, Integers):
        q, r = divmod(x.v, d.v)
        if r:
            raise DivisibilityError(f"{x} is not divisible by {d}")
        return R(q)
    if isinstance(R, PolyExt):
        return poly_exact_divide(x, d)
    if isinstance(R, QuotExt):
        M = R.mult_matrix(d)
        det = determinant(M, R.base)
        adj = adjugate(M, R.base)
        xs = R.coords(x)
        ys = []
        for i in range(R.degree):
            acc = R.base.zero
            for j in range(R.degree):
                acc = acc + adj[i][j] * xs[j]
            ys.append(exact_quotient(acc, det))
        y = R.from_coords(ys)
        if y * d != x:
            raise DivisibilityError(f"{x} is not divisible by {d}")
        return y
    if d.is_unit():
        return x * d.inverse()
    raise CapabilityError(f"exact division is not available over {R}")


def is_nonzerodivisor(c: RingElem):
    """``True``/``False`` when decidable, ``None`` when unknown."""
    R = c.ring
    if c.is_zero():
        return False
    if R.enumerable:
        return all(not (c * x).is_zero() for x in R.elements() if not x.is_zero())
    if R.is_domain_known or isinstance(R, Integers) or R.is_field:
        return True
    return None


def is_reduced(R: Ring):
    """Whether ``R`` has no nonzero nilpotents (``None`` when unknown)."""
    if R.is_field or R.is_domain_known or isinstance(R, Integers):
        return True
    if R.enumerable:
        card = R.cardinality()
        return all((x ** card).is_zero() is False for x in R.elements() if not x.is_zero())
    return None


@dataclass(frozen=True)
class BenignResult:
    benign: bool | None
    reason: str

    def __bool__(self):
        return bool(self.benign)


def is_benign(R: Ring, G: PermGroup) -> BenignResult:
    """The two sufficient conditions for faithful closure algebras.

    The pair is benign when ``R`` is reduced or ``|G|`` is a non-zerodivisor;
    this predicate only reports, nothing is gated on it.
    """
    if is_reduced(R):
        return BenignResult(True, f"{R} is reduced")
    nzd = is_nonzerodivisor(R(G.order))
    if nzd:
        return BenignResult(True, f"|G| = {G.order} is a non-zerodivisor in {R}")
    if nzd is None or is_reduced(R) is None:
        return BenignResult(None, "neither condition could be decided")
    return BenignResult(False, f"{R} is not reduced and |G| = {G.order} is a zerodivisor")


def _symmetric_value(A: FreeAlgebra, G: PermGroup, coords) -> RingElem:
    """Ferrand value of an ``S_n``-invariant element given in G-orbit coordinates."""
    R = A.ring
    n = A.rank
    F = ferrand_table(A)
    obG = orbit_basis(G, n)
    at = obG.orbit_of[np.asarray(F.basis.reps, dtype=np.int64)]
    coords = np.asarray(coords)
    s_coords = coords[at]
    if not arrays.arrays_equal(R, s_coords[coarsening(G, symmetric(n), n)], coords):
        raise NotInvariantError("element is not S_n-invariant")
    total = arrays.normalize(R, np.asarray([np.dot(s_coords, F.values)]))[0]
    return arrays.lift(R, total)


def hom_from_generator(Q: QuotientAlgebra, z, r: RingElem) -> np.ndarray:
    """The map out of a free quotient with ``z ↦ r``, when ``1, z, z^2, ...`` is a basis."""
    R = Q.ring
    k = Q.rank
    if not Q.is_free:
        raise CapabilityError("the quotient is not free")
    rows = [Q.unit]
    for _ in range(1, k):
        rows.append(Q.mul_arrays(rows[-1], z))
    P = [arrays.to_elems(R, row) for row in rows]
    rhs = [r ** i for i in range(k)]
    det = determinant(P, R)
    x = None
    try:
        adj = adjugate(P, R)
        x = [exact_quotient(sum((adj[i][j] * rhs[j] for j in range(k)), R.zero), det) for i in range(k)]
    except (DivisibilityError, CapabilityError):
        x = None
    if x is None:
        if not R.enumerable:
            raise CapabilityError("the powers of the generator do not form a basis")
        zv = np.asarray(z)
        found = [h for h in Q.homs_to_ring()
                 if arrays.lift(R, arrays.normalize(R, np.asarray([np.dot(zv, h)]))[0]) == r]
        if len(found) != 1:
            raise CapabilityError(f"{len(found)} maps send the generator to {r}")
        return found[0]
    if not _is_hom_vector(Q.struct, Q.unit, Q.orders, R, x):
        raise HomomorphismError(f"sending the generator to {r} is not a ring map")
    return arrays.from_elems(R, x)


# --- A_n: discriminant algebra ----------------------------------------------------------------

@dataclass
class DiscriminantAlgebra:
    """``q(y) = y^2 - t y + m`` with ``t = Φ(γ + γ')`` and ``m = Φ(γγ')``."""

    quadratic: MonicPoly
    trace: RingElem
    norm: RingElem
    resolvent: ResolventAlgebra | None = None

    @property
    def discriminant(self) -> RingElem:
        return self.trace * self.trace - self.norm * 4


_DISC_CACHE: dict = {}


def discriminant_algebra(A: FreeAlgebra, odd=None) -> DiscriminantAlgebra:
    """The discriminant algebra of ``A`` with respect to its basis.

    ``odd`` picks the odd permutation producing the partner ``γ'`` (default
    the transposition of the first two slots).
    """
    key = (id(A), tuple(odd) if odd else None)
    hit = _DISC_CACHE.get(key)
    if hit is not None and hit[0] is A:
        return hit[1]
    R = A.ring
    n = A.rank
    if n < 2:
        raise DimensionError("discriminant algebras need rank >= 2")
    An = alternating(n)
    g, g12 = gamma([A.basis(i) for i in range(n)])
    if odd is not None:
        inv = invariant_ring(A, An)
        moved = transport_orbits(inv.basis, tuple(odd), inv.basis)
        coords = arrays.zeros(R, (inv.size,))
        coords[moved] = g.coords
        g12 = inv.element(coords)
    t = _symmetric_value(A, An, (g + g12).coords)
    m = _symmetric_value(A, An, (g * g12).coords)
    q = MonicPoly(R, (t, m))
    res = None
    if R.linear_algebra_capable:
        res = resolvent_algebra(A, An)
        if res.rank != 2 or not res.quotient.is_free:
            raise ConsistencyError(f"resolvent algebra for A{n} has rank {res.rank}, expected a free rank 2")
        cp = res.char_poly(g)
        if cp != q:
            raise ConsistencyError(f"char poly of the γ class is {cp.format('y')}, expected {q.format('y')}")
    out = DiscriminantAlgebra(q, t, m, res)
    _DISC_CACHE[key] = (A, out)
    return out


def an_linear_form(A: FreeAlgebra):
    """``(a, b)`` with ``φ(e_O) = a_O + b_O r`` for the ``A_n`` datum of a root ``r``.

    Solved from ``e_O + e_O' = Φ(e_O + e_O')`` and
    ``e_O γ + e_O' γ' = Φ(e_O γ + e_O' γ')`` with ``e_O = a + b γ``; the
    determinant of that system is the discriminant, so this needs a domain
    with nonzero discriminant.
    """
    R = A.ring
    n = A.rank
    An = alternating(n)
    inv = invariant_ring(A, An)
    ob = inv.basis
    D = discriminant_algebra(A)
    t, m = D.trace, D.norm
    disc = D.discriminant
    if disc.is_zero():
        raise CapabilityError("the discriminant is zero; use a ring with linear algebra instead")
    F = ferrand_table(A)
    to_s = coarsening(An, symmetric(n), n)
    counts = np.bincount(to_s, minlength=F.basis.size)
    t12 = tuple([1, 0] + list(range(2, n)))
    partner = transport_orbits(ob, t12, ob)
    g, g12 = gamma([A.basis(i) for i in range(n)])
    a_vals, b_vals = [], []
    for o in range(ob.size):
        s_val = F.table[to_s[o]]
        if counts[to_s[o]] == 1:
            a_vals.append(s_val)
            b_vals.append(R.zero)
            continue
        e = inv.orbit_sum(o)
        e2 = inv.orbit_sum(int(partner[o]))
        u = _symmetric_value(A, An, (e * g + e2 * g12).coords)
        a_vals.append(exact_quotient(s_val * (t * t - m * 2) - t * u, disc))
        b_vals.append(exact_quotient(u * 2 - t * s_val, disc))
    return arrays.from_elems(R, a_vals), arrays.from_elems(R, b_vals)


def an_closure_from_root(A: FreeAlgebra, r, check: bool = True) -> ClosureDatum:
    """The ``A_n`` datum sending the class of ``γ(θ_1, ..., θ_n)`` to ``r``."""
    R = A.ring
    r = R(r) if not isinstance(r, str) else R.parse(r)
    D = discriminant_algebra(A)
    if not D.quadratic(r).is_zero():
        raise HomomorphismError(f"{r} is not a root of {D.quadratic.format('y')}")
    n = A.rank
    if D.resolvent is not None:
        res = D.resolvent
        g, _ = gamma([A.basis(i) for i in range(n)])
        x = hom_from_generator(res.quotient, res.class_of(g), r)
        phi = res.datum_from_hom(x)
    else:
        a, b = an_linear_form(A)
        rv = arrays.from_elems(R, [r])[0]
        phi = ClosureDatum(A, alternating(n), arrays.normalize(R, a + b * rv))
    if check:
        verify_closure_datum(phi, raise_on_failure=True)
    return phi


def symbolic_an_datum(A: FreeAlgebra, var: str = "y"):
    """The universal ``A_n`` datum over the discriminant algebra ``Δ = R[y]/(q)``.

    Returns ``(Δ, datum)``; the datum lives on the base change of ``A`` to ``Δ``
    and sends the class of ``γ`` to ``y``.
    """
    R = A.ring
    D = discriminant_algebra(A)
    Delta = QuotExt.from_coeffs(R, var, D.quadratic.coeffs())
    a, b = an_linear_form(A)
    to_delta = RingMap(R, Delta)
    AD = A.base_change(to_delta)
    y = Delta.gen
    vals = [to_delta(x) + to_delta(z) * y for x, z in zip(arrays.to_elems(R, a), arrays.to_elems(R, b))]
    return Delta, ClosureDatum(AD, alternating(A.rank), vals)


@dataclass
class SqrtDiscCorrespondence:
    """Roots ``x`` of ``y^2 + b y + c`` matched with square roots ``2x + b`` of ``b^2 - 4c``."""

    quadratic: MonicPoly
    b: RingElem
    c: RingElem
    discriminant: RingElem
    pairs: list = field(default_factory=list)

    def forward(self, x: RingElem) -> RingElem:
        return x * 2 + self.b

    def inverse(self, d: RingElem) -> RingElem:
        return exact_quotient(d - self.b, self.b.ring(2))


def sqrt_disc_correspondence(A: FreeAlgebra, bound: int = PRIMOID_SEARCH_BOUND) -> SqrtDiscCorrespondence:
    """``x ↦ 2x + b``, checked to be a bijection onto the square roots."""
    R = A.ring
    D = discriminant_algebra(A)
    b, c = -D.trace, D.norm
    two = R(2)
    pr = is_primoid(two, bound=bound)
    if not pr:
        u, v = pr.witness
        raise HypothesisError(f"primoid hypothesis fails: 2 is not primoid in {R} "
                              f"(({u})·({v}) = {u * v} is divisible by 4, neither factor by 2)")
    if is_nonzerodivisor(two) is not True:
        raise HypothesisError(f"primoid hypothesis fails: 2 is not known to be a non-zerodivisor in {R}")
    disc = b * b - c * 4
    roots = find_monic_roots(D.quadratic)
    sqrts = find_monic_roots([-disc, R.zero, R.one], R)
    out = SqrtDiscCorrespondence(D.quadratic, b, c, disc)
    images = {}
    for x in sorted(roots, key=str):
        d = out.forward(x)
        if d * d != disc:
            raise ConsistencyError(f"2x + b = {d} does not square to {disc}")
        if out.inverse(d) != x:
            raise ConsistencyError(f"inverse image of {d} is not {x}")
        images[d] = x
        out.pairs.append((x, d))
    if set(images) != set(sqrts) or len(images) != len(roots):
        raise ConsistencyError("x ↦ 2x + b is not a bijection onto the square roots of the discriminant")
    return out


# --- D_4: cubic resolvent ------------------------------------------------------------------------

def cubic_resolvent(f: MonicPoly) -> MonicPoly:
    """``y^3 - s2 y^2 + (s1 s3 - 4 s4) y - (s1^2 s4 - 4 s2 s4 + s3^2)``."""
    if f.degree != 4:
        raise DimensionError(f"the cubic resolvent needs a quartic, got degree {f.degree}")
    s1, s2, s3, s4 = f.s
    return MonicPoly(f.ring, (s2, s1 * s3 - s4 * 4, s1 * s1 * s4 - s2 * s4 * 4 + s3 * s3))


_XRING = PolyExt(ZZ, ("x1", "x2", "x3", "x4"))
_ERING = PolyExt(ZZ, ("e1", "e2", "e3", "e4"))
_D4 = dihedral4()
# (14) and (12), 0-based one-line
_PRIME = (3, 1, 2, 0)
_DPRIME = (1, 0, 2, 3)


def _lambda_polys():
    x1, x2, x3, x4 = (_XRING.var(i) for i in range(4))
    L = x1 * x3 + x2 * x4
    return L, permute_variables(L, _PRIME), permute_variables(L, _DPRIME)


def _is_fixed(p: RingElem, perms) -> bool:
    return all(permute_variables(p, s) == p for s in perms)


def qrs_decompose(p: RingElem):
    """``(q, r, s)`` symmetric with ``p = q Λ^2 + r Λ + s``, for D4-invariant ``p``."""
    if p.ring != _XRING:
        p = _XRING(p)
    if not _is_fixed(p, _D4.generators):
        raise NotInvariantError("polynomial is not fixed by the dihedral group <(13),(1234)>")
    L, L1, L2 = _lambda_polys()
    dL = L1 - L2
    p1, p2 = permute_variables(p, _PRIME), permute_variables(p, _DPRIME)
    rho = poly_exact_divide(p1 - p2, dL)
    q = -poly_exact_divide(permute_variables(rho, _PRIME) - permute_variables(rho, _DPRIME), dL)
    r = rho - q * (L1 + L2)
    s = p - q * L * L - r * L
    if q * L * L + r * L + s != p:
        raise ConsistencyError("p != q Λ^2 + r Λ + s")
    s4 = symmetric(4).generators
    for name, poly in (("q", q), ("r", r), ("s", s)):
        if not _is_fixed(poly, s4):
            raise ConsistencyError(f"{name} is not symmetric")
    return q, r, s


def elementary_symmetric(P: PolyExt, k: int) -> RingElem:
    n = P.nvars
    total = P.zero
    for subset in itertools.combinations(range(n), k):
        total = total + P.monomial(tuple(1 if i in subset else 0 for i in range(n)))
    return total


def symmetrize(p: RingElem, target: PolyExt | None = None) -> RingElem:
    """The polynomial in ``e_1..e_n`` equal to the symmetric ``p`` (lex leading terms)."""
    P = p.ring
    n = P.nvars
    if not _is_fixed(p, symmetric(n).generators):
        raise NotInvariantError("polynomial is not symmetric")
    E = target or PolyExt(P.base, tuple(f"e{i + 1}" for i in range(n)))
    es = [elementary_symmetric(P, k) for k in range(1, n + 1)]
    powers = {}

    def epow(k, m):
        if (k, m) not in powers:
            powers[(k, m)] = es[k] ** m
        return powers[(k, m)]

    out = {}
    r = p
    while not r.is_zero():
        exps, c = max(r.v, key=lambda t: t[0])
        d = tuple(exps[i] - exps[i + 1] for i in range(n - 1)) + (exps[n - 1],)
        if any(x < 0 for x in d):
            raise ConsistencyError("leading exponent is not non-increasing")
        term = P.monomial((0,) * n, RingElem(P.base, c))
        for k, m in enumerate(d):
            if m:
                term = term * epow(k, m)
        r = r - term
        out[d] = RingElem(P.base, c) if d not in out else out[d] + RingElem(P.base, c)
    return E.from_dict(out)


def evaluate_symmetric(e_poly: RingElem, s_values, R: Ring) -> RingElem:
    """Substitute ``e_k ↦ s_k`` (ring elements of ``R``) into an integer polynomial."""
    total = R.zero
    for exps, c in e_poly.v:
        term = R(c)
        for sk, m in zip(s_values, exps):
            if m:
                term = term * sk ** m
        total = total + term
    return total


_D4_FORMS: dict = {}


def d4_orbit_forms(rep: tuple):
    """Symmetric ``(q̂, r̂, ŝ)`` in ``e_1..e_4`` for the orbit sum of the monomial ``x^rep``."""
    if rep in _D4_FORMS:
        return _D4_FORMS[rep]
    seen = set()
    terms = {}
    for g in _D4.elements:
        # slot p moves to slot g(p)
        moved = [0] * 4
        for pslot in range(4):
            moved[g[pslot]] = rep[pslot]
        moved = tuple(moved)
        if moved not in seen:
            seen.add(moved)
            terms[moved] = RingElem(ZZ, 1)
    p = _XRING.from_dict(terms)
    q, r, s = qrs_decompose(p)
    forms = tuple(symmetrize(x, _ERING) for x in (q, r, s))
    _D4_FORMS[rep] = forms
    return forms


def lambda_orbit(A: FreeAlgebra) -> int:
    """Index of the D4-orbit of ``x⊗1⊗x⊗1`` (the orbit sum is ``Λ``)."""
    return orbit_basis(_D4, A.rank).orbit_index((1, 0, 1, 0))


def _check_monogenic_quartic(A: FreeAlgebra):
    if A.rank != 4 or A.poly is None:
        raise CapabilityError("D4 data are parameterized for monogenic quartic algebras R[x]/(f)")


def d4_values_symmetric(A: FreeAlgebra, rho: RingElem) -> np.ndarray:
    """D4 datum values by writing each orbit sum as ``q Λ^2 + r Λ + s``."""
    _check_monogenic_quartic(A)
    R = A.ring
    s_vals = list(A.poly.s)
    ob = orbit_basis(_D4, 4)
    vals = []
    for o in range(ob.size):
        qh, rh, sh = d4_orbit_forms(ob.rep_tuple(o))
        q = evaluate_symmetric(qh, s_vals, R)
        r = evaluate_symmetric(rh, s_vals, R)
        s = evaluate_symmetric(sh, s_vals, R)
        vals.append(q * rho * rho + r * rho + s)
    return arrays.from_elems(R, vals)


def d4_values_resolvent(A: FreeAlgebra, rho: RingElem) -> np.ndarray:
    """D4 datum values from the map out of the resolvent algebra with ``Λ ↦ ρ``."""
    _check_monogenic_quartic(A)
    R = A.ring
    res = resolvent_algebra(A, _D4)
    e = arrays.zeros(R, (res.invariants.size,))
    e[lambda_orbit(A)] = arrays.lower(R, 1)
    x = hom_from_generator(res.quotient, res.class_of(e), rho)
    return res.datum_from_hom(x).values


@dataclass
class D4Construction:
    datum: ClosureDatum
    resolvent_route: np.ndarray | None
    symmetric_route: np.ndarray

    @property
    def routes_agree(self) -> bool:
        return self.resolvent_route is None or arrays.arrays_equal(
            self.datum.ring, self.resolvent_route, self.symmetric_route)


def d4_construction(A: FreeAlgebra, rho, check: bool = True) -> D4Construction:
    """Build the D4 datum of a cubic-resolvent root by both routes and compare."""
    _check_monogenic_quartic(A)
    R = A.ring
    rho = R.parse(rho) if isinstance(rho, str) else R(rho)
    m = cubic_resolvent(A.poly)
    if not m(rho).is_zero():
        raise HomomorphismError(f"{rho} is not a root of {m.format('y')}")
    sym = d4_values_symmetric(A, rho)
    via_res = d4_values_resolvent(A, rho) if R.linear_algebra_capable else None
    out = D4Construction(ClosureDatum(A, _D4, sym), via_res, sym)
    if not out.routes_agree:
        raise ConsistencyError("the resolvent-algebra and symmetric-function D4 constructions disagree")
    if check:
        verify_closure_datum(out.datum, raise_on_failure=True)
    return out


def d4_closure_from_root(A: FreeAlgebra, rho, check: bool = True) -> ClosureDatum:
    return d4_construction(A, rho, check).datum


# --- intransitive data from factorizations ---------------------------------------------------------

@dataclass(frozen=True)
class FactorizationDatum:
    f: MonicPoly
    factors: tuple

    def __post_init__(self):
        prod = reduce(lambda a, b: a * b, self.factors)
        if prod != self.f:
            raise ValueError(f"factors multiply to {prod.format()}, not {self.f.format()}")

    @property
    def sizes(self) -> list:
        return [g.degree for g in self.factors]


def factorization_closure(A: FreeAlgebra, fact: FactorizationDatum, check: bool = True) -> ClosureDatum:
    """The ``S_{n_1} × ... × S_{n_k}`` datum of a factorization ``f = Π f_i``."""
    R = A.ring
    if A.poly is None or A.poly != fact.f:
        raise ValueError("the algebra is not R[x]/(f) for the factored polynomial")
    parts = [make_monogenic(R, g) for g in fact.factors]
    B, _, _ = make_product(*parts)
    # x ↦ (x, ..., x): the image of x^k is the tuple of x^k in each factor
    xB = arrays.zeros(R, (B.rank,))
    off = 0
    for P in parts:
        xB[off:off + P.rank] = P.gen().coords
        off += P.rank
    images = [B.one.coords]
    for _ in range(1, A.rank):
        images.append(B.mul_arrays(images[-1], xB))
    h = AlgHom(A, B, np.stack(images))
    if not is_universally_norm_preserving(h):
        raise ConsistencyError("the diagonal map is not universally norm-preserving")
    prod = product_closure([ClosureDatum.ferrand(P) for P in parts], B)
    phi = pullback(prod, h)
    if check:
        verify_closure_datum(phi, raise_on_failure=True)
    return phi


def factors_from_datum(phi: ClosureDatum, sizes) -> FactorizationDatum:
    """Read ``f_i`` off a Young-subgroup datum: ``s_k(f_i) = φ(e_k(x) on block i)``."""
    A = phi.algebra
    R = A.ring
    n = A.rank
    if sum(sizes) != n:
        raise DimensionError("block sizes must add up to the rank")
    if A.poly is None:
        raise CapabilityError("factor extraction needs a monogenic algebra")
    G = young(sizes)
    if phi.group != G:
        raise ValueError(f"datum group {phi.group} is not {G}")
    inv = invariant_ring(A, G)
    T = inv.tensor
    x = A.gen()
    factors = []
    off = 0
    for size in sizes:
        s_vals = []
        for k in range(1, size + 1):
            total = T.zero
            for subset in itertools.combinations(range(off, off + size), k):
                total = total + T.pure([x if s in subset else A.one for s in range(n)])
            s_vals.append(phi(inv.coords_of(total)))
        factors.append(MonicPoly(R, tuple(s_vals)))
        off += size
    return FactorizationDatum(A.poly, tuple(factors))


def monic_factorizations(f: MonicPoly, sizes) -> list:
    """Ordered factorizations ``f = f_1 ... f_k`` with ``deg f_i = sizes[i]`` (enumerable rings)."""
    R = f.ring
    if not R.enumerable:
        raise CapabilityError(f"factorization search needs an enumerable ring, not {R}")
    elems = list(R.elements())
    if len(sizes) == 1:
        return [(f,)] if sizes[0] == f.degree else []
    out = []
    for tail in itertools.product(elems, repeat=sizes[0]):
        g = MonicPoly(R, tuple(tail))
        h = _monic_divide(f, g)
        if h is None:
            continue
        for rest in monic_factorizations(h, sizes[1:]):
            out.append((g,) + rest)
    return out


def _monic_divide(f: MonicPoly, g: MonicPoly):
    """``f / g`` when ``g`` divides ``f`` exactly, else ``None``."""
    R = f.ring
    num = list(f.coeffs())
    den = g.coeffs()
    dq = len(num) - len(den)
    if dq < 0:
        return None
    quo = [R.zero] * (dq + 1)
    for k in range(dq, -1, -1):
        c = num[k + len(den) - 1]
        quo[k] = c
        for i, d in enumerate(den):
            num[k + i] = num[k + i] - c * d
    if any(not c.is_zero() for c in num[:len(den) - 1]):
        return None
    return MonicPoly.from_coeffs(R, quo)


# --- products ------------------------------------------------------------------------------------

def product_closure(data, B: FreeAlgebra | None = None) -> ClosureDatum:
    """``Π G_i``-datum on ``Π A_i``: ``⊗ φ_i`` on block-respecting orbits, 0 elsewhere."""
    data = list(data)
    if len(data) == 1 and B is None:
        return data[0]
    R = data[0].ring
    if any(d.ring != R for d in data):
        raise ValueError("data must share the base ring")
    if B is None:
        B, _, _ = make_product(*(d.algebra for d in data))
    G = block_product([d.group for d in data])
    N = B.rank
    ob = orbit_basis(G, N)
    offsets = list(itertools.accumulate([0] + [d.algebra.rank for d in data]))[:-1]
    vals = []
    for o in range(ob.size):
        I = ob.rep_tuple(o)
        v = R.one
        for d, off in zip(data, offsets):
            sub = I[off:off + d.algebra.rank]
            if any(not off <= i < off + d.algebra.rank for i in sub):
                v = R.zero
                break
            v = v * d[d.basis.orbit_index(tuple(i - off for i in sub))]
        vals.append(v)
    return ClosureDatum(B, G, vals)


@dataclass
class ProductCheck:
    closure: QuotientAlgebra
    rank: int
    expected_rank: int
    index: int
    idempotents: list
    idempotents_ok: bool

    @property
    def ok(self) -> bool:
        return self.rank == self.expected_rank and self.idempotents_ok


def stronger_product_check(data, H: PermGroup) -> ProductCheck:
    """Closure of the H-datum induced from ``Π φ_i``: rank ``(H:G) Π rank_i`` and ``(H:G)`` idempotents."""
    data = list(data)
    phi = product_closure(data)
    G = phi.group
    if not G <= H:
        raise ValueError(f"{G} is not contained in {H}")
    off = 0
    for d in data:
        k = d.algebra.rank
        if block_restriction(H, off, k) != d.group:
            raise ValueError(f"H meets the block symmetric group in more than {d.group}")
        off += k
    psi = induce(phi, H)
    Q = closure_algebra(psi)
    index = H.order // G.order
    expected = index
    for d in data:
        expected *= closure_algebra(d).rank
    B = phi.algebra
    R = B.ring
    T = TensorAlgebra(B)
    idems = []
    off = 0
    blocks = []
    for i, d in enumerate(data):
        blocks.extend([i] * d.algebra.rank)
    eps = []
    off = 0
    for d in data:
        e = arrays.zeros(R, (B.rank,))
        e[off:off + d.algebra.rank] = d.algebra.unit
        eps.append(B.element(e))
        off += d.algebra.rank
    E = T.pure([eps[blocks[s]] for s in range(B.rank)])
    seen = set()
    for h in H.elements:
        coset = frozenset(compose(h, g) for g in G.elements)
        if coset in seen:
            continue
        seen.add(coset)
        idems.append(Q.reduce(T.permute_array(h, E.coords)))
    ok = _orthogonal_decomposition(Q, idems)
    return ProductCheck(Q, Q.rank, expected, index, idems, ok)


def _orthogonal_decomposition(Q: QuotientAlgebra, es) -> bool:
    from .quotient import check_orthogonal_decomposition

    R = Q.ring
    if any(not arrays.arrays_equal(R, Q.mul_arrays(e, e), e) for e in es):
        return False
    if any(arrays.is_zero_array(R, e) for e in es):
        return False
    return check_orthogonal_decomposition(Q, es)


# --- 1-closures from maps to R --------------------------------------------------------------------

def one_closure_from_homs(homs, check: bool = True) -> ClosureDatum:
    """The trivial-group datum ``⊗ f_i`` of maps ``f_1, ..., f_n: A → R``."""
    homs = list(homs)
    A = homs[0].source
    R = A.ring
    n = A.rank
    if len(homs) != n:
        raise DimensionError(f"a rank-{n} algebra needs {n} maps, got {len(homs)}")
    cols = [np.asarray(h.images)[:, 0] for h in homs]
    M = np.stack(cols, axis=1)
    F = AlgHom(A, trivial_algebra(R, n), M, check=False)
    if not is_universally_norm_preserving(F):
        raise NotAClosureDatum(_unp_violation(A, homs), law="norm-preserving")
    vals = cols[0]
    for c in cols[1:]:
        vals = arrays.normalize(R, np.multiply.outer(vals, c).reshape(-1))
    G = PermGroup(n, [], name="1")
    phi = ClosureDatum(A, G, vals)
    if check:
        verify_closure_datum(phi, raise_on_failure=True)
    return phi


def _unp_violation(A: FreeAlgebra, homs) -> str:
    R = A.ring
    candidates = [A.basis(i) for i in range(A.rank)]
    candidates += [A.basis(i) + A.basis(j) for i in range(A.rank) for j in range(i + 1, A.rank)]
    for a in candidates:
        cp = char_poly(a)
        prod = reduce(lambda u, v: u * v,
                      [MonicPoly(R, (arrays.lift(R, h(a).coords[0]),)) for h in homs])
        if cp != prod:
            return (f"the maps do not preserve norms: {a} has char poly {cp.format('λ')} "
                    f"but its images give {prod.format('λ')}")
    return "the maps are not universally norm-preserving"


# --- dispatch -------------------------------------------------------------------------------------

def closure_data(A: FreeAlgebra, G: PermGroup) -> list:
    """All G-closure data, through the resolvent algebra or an explicit parameterization."""
    R = A.ring
    n = A.rank
    if G == symmetric(n):
        return [ClosureDatum.ferrand(A)]
    if R.linear_algebra_capable:
        return enumerate_closure_data(A, G)
    if n >= 2 and G == alternating(n):
        q = discriminant_algebra(A).quadratic
        return [an_closure_from_root(A, r) for r in sorted(find_monic_roots(q), key=str)]
    if n == 4 and G == _D4 and A.poly is not None:
        m = cubic_resolvent(A.poly)
        return [d4_closure_from_root(A, r) for r in sorted(find_monic_roots(m), key=str)]
    raise CapabilityError(f"no method to enumerate {G}-closure data over {R}")
