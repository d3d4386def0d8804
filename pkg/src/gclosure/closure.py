"""Closure data ``(G, φ)`` and the algebras built from them.

A G-closure datum of a free rank-``n`` algebra ``A`` is a ring map
``φ: (A^{⊗n})^G → R`` that agrees with the Ferrand map on the ``S_n``
invariants.  It is stored as its values on the G-orbit-sum basis.

Two quotients are computed here:

* the resolvent algebra ``(A^{⊗n})^G ⊗_{(A^{⊗n})^{S_n}} R``, whose maps to
  ``R`` are exactly the G-closure data;
* the closure algebra ``A^{⊗n} / (b - φ(b))`` of a single datum.

For both, the ideal is the R-span of ``{c·g}`` with ``g`` running over the
generators ``b - φ(b)`` and ``c`` over an R-basis of the ring: any element of
the ideal is ``Σ x_j g_j`` and each ``x_j`` is an R-combination of basis
elements, so one multiplication layer already spans it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import arrays
from .algebra import FreeAlgebra
from .errors import CapabilityError, DimensionError, GuardError, NotAClosureDatum
from .ferrand import ferrand_table
from .groups import PermGroup, format_perm, symmetric
from .normal_forms import QuotientModule
from .quotient import QuotientAlgebra
from .rings import Ring, RingMap
from .tensors import TensorAlgebra, invariant_ring, orbit_basis, transport_orbits

CLOSURE_GUARD_N = 4
ISOMORPHISM_GUARD_N = 5


def coarsening(G: PermGroup, H: PermGroup, rank: int) -> np.ndarray:
    """For ``G ≤ H``, the H-orbit containing each G-orbit."""
    if not G <= H:
        raise ValueError(f"{G} is not contained in {H}")
    small = orbit_basis(G, rank)
    big = orbit_basis(H, rank)
    return big.orbit_of[np.asarray(small.reps, dtype=np.int64)]


def _sum_into(R: Ring, values, idx, size) -> np.ndarray:
    out = arrays.zeros(R, (size,))
    if out.dtype != object:
        np.add.at(out, idx, np.asarray(values, dtype=np.int64))
        return arrays.normalize(R, out)
    for v, i in zip(values, idx):
        out[i] = out[i] + v
    return arrays.normalize(R, out)


class ClosureDatum:
    """A candidate ``(G, φ)`` for ``A``; ``values[o] = φ(e_o)``.

    Construction does not verify the laws; see :func:`verify_closure_datum`.
    """

    def __init__(self, algebra: FreeAlgebra, group: PermGroup, values):
        if group.degree != algebra.rank:
            raise DimensionError(f"group of degree {group.degree} for an algebra of rank {algebra.rank}")
        self.algebra = algebra
        self.group = group
        self.ring = algebra.ring
        self.basis = orbit_basis(group, algebra.rank)
        if isinstance(values, np.ndarray):
            vals = arrays.normalize(self.ring, values.copy())
        else:
            vals = arrays.from_elems(self.ring, list(values))
        if vals.shape != (self.basis.size,):
            raise DimensionError(f"{vals.shape[0]} values for {self.basis.size} orbits")
        self.values = vals

    @classmethod
    def ferrand(cls, A: FreeAlgebra) -> "ClosureDatum":
        """The canonical ``S_n`` datum given by the Ferrand table."""
        F = ferrand_table(A)
        return cls(A, symmetric(A.rank), F.values)

    @property
    def invariants(self):
        return invariant_ring(self.algebra, self.group)

    def __getitem__(self, label):
        """Value on an orbit, by index or representative label like ``"(1,2,3)"``."""
        if isinstance(label, str):
            label = self.basis.label_index(label)
        return arrays.lift(self.ring, self.values[label])

    def rows(self) -> list:
        return [(self.basis.rep_label(o), self[o]) for o in range(self.basis.size)]

    def __call__(self, x) -> object:
        """``φ`` on an invariant element (coordinates or InvariantElem)."""
        coords = getattr(x, "coords", x)
        R = self.ring
        return arrays.lift(R, arrays.normalize(R, np.asarray([np.dot(np.asarray(coords), self.values)]))[0])

    def __eq__(self, other):
        return (isinstance(other, ClosureDatum) and self.group == other.group
                and self.algebra.rank == other.algebra.rank and self.ring == other.ring
                and arrays.arrays_equal(self.ring, self.algebra.struct, other.algebra.struct)
                and arrays.arrays_equal(self.ring, self.values, other.values))

    def __hash__(self):
        return hash((self.group, tuple(str(v) for v in arrays.to_elems(self.ring, self.values))))

    def __repr__(self):
        return f"ClosureDatum({self.group}, {len(self.values)} orbits over {self.ring})"

    def format(self) -> str:
        return "\n".join(f"{label} -> {v}" for label, v in self.rows())


# --- verification ----------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyResult:
    """Outcome of :func:`verify_closure_datum`; falsy when a law fails."""

    ok: bool
    law: str | None = None
    where: tuple | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def verify_closure_datum(phi: ClosureDatum, raise_on_failure: bool = False) -> VerifyResult:
    """Check unit, restriction to the Ferrand map and multiplicativity."""
    res = _verify(phi)
    if raise_on_failure and not res.ok:
        raise NotAClosureDatum(res.message, law=res.law, where=res.where)
    return res


def _verify(phi: ClosureDatum) -> VerifyResult:
    R = phi.ring
    A = phi.algebra
    inv = phi.invariants
    ob = phi.basis
    vals = phi.values

    one = phi(inv.unit)
    if one != R.one:
        return VerifyResult(False, "unit", None, f"φ(1) = {one}, not 1")

    n = A.rank
    Sn = symmetric(n)
    F = ferrand_table(A)
    to_s = coarsening(phi.group, Sn, n)
    sums = _sum_into(R, vals, to_s, F.basis.size)
    for s in range(F.basis.size):
        if arrays.lift(R, sums[s]) != F.table[s]:
            label = F.basis.rep_label(s)
            return VerifyResult(False, "restriction", (label,),
                                f"values over the G-orbits in {label} sum to {arrays.lift(R, sums[s])}, "
                                f"but the Ferrand value is {F.table[s]}")

    N = ob.size
    lhs = arrays.normalize(R, np.tensordot(inv.struct, vals, axes=([2], [0])))
    rhs = arrays.normalize(R, np.multiply.outer(vals, vals))
    if not arrays.arrays_equal(R, lhs, rhs):
        for i in range(N):
            for j in range(i, N):
                a, b = arrays.lift(R, lhs[i, j]), arrays.lift(R, rhs[i, j])
                if a != b:
                    pair = (ob.rep_label(i), ob.rep_label(j))
                    return VerifyResult(False, "multiplicativity", pair,
                                        f"φ(e{pair[0]} e{pair[1]}) = {a} but φ(e{pair[0]})φ(e{pair[1]}) = {b}")
    return VerifyResult(True)


# --- induction and the S_n action ---------------------------------------------------------

def induce(phi: ClosureDatum, H: PermGroup) -> ClosureDatum:
    """The H-datum obtained by restricting ``φ`` to ``(A^{⊗n})^H``."""
    if H.degree != phi.group.degree or not phi.group <= H:
        raise ValueError(f"{phi.group} is not a subgroup of {H}")
    n = phi.algebra.rank
    idx = coarsening(phi.group, H, n)
    vals = _sum_into(phi.ring, phi.values, idx, orbit_basis(H, n).size)
    return ClosureDatum(phi.algebra, H, vals)


def act(sigma, phi: ClosureDatum) -> ClosureDatum:
    """``σ·(G, φ) = (σGσ⁻¹, φ∘σ⁻¹)``."""
    sigma = tuple(sigma)
    n = phi.algebra.rank
    if len(sigma) != phi.group.degree:
        raise DimensionError("permutation degree differs from the datum's")
    H = phi.group.conjugate(sigma)
    if H == phi.group:
        H = phi.group
    target = orbit_basis(H, n)
    moved = transport_orbits(phi.basis, sigma, target)
    vals = arrays.zeros(phi.ring, (target.size,))
    vals[moved] = phi.values
    return ClosureDatum(phi.algebra, H, vals)


def isomorphic(phi: ClosureDatum, psi: ClosureDatum):
    """A permutation ``σ`` with ``σ·φ = ψ``, or ``None``."""
    n = phi.group.degree
    if psi.group.degree != n or phi.group.order != psi.group.order:
        return None
    if n > ISOMORPHISM_GUARD_N:
        raise GuardError(f"isomorphism search over S_{n}", limit=ISOMORPHISM_GUARD_N)
    for sigma in itertools.permutations(range(n)):
        if phi.group.conjugate(sigma) != psi.group:
            continue
        if act(sigma, phi) == psi:
            return sigma
    return None


def stabilizer(phi: ClosureDatum) -> list:
    """Permutations fixing the datum (contains ``G``)."""
    return [s for s in itertools.permutations(range(phi.group.degree)) if act(s, phi) == phi]


def base_change(phi: ClosureDatum, ring_map: RingMap, algebra: FreeAlgebra | None = None) -> ClosureDatum:
    """Push the datum through a ring map (the algebra is base-changed too)."""
    if ring_map.source != phi.ring:
        raise CapabilityError(f"ring map starts at {ring_map.source}, datum lives over {phi.ring}")
    B = algebra if algebra is not None else phi.algebra.base_change(ring_map)
    vals = [ring_map(v) for v in arrays.to_elems(phi.ring, phi.values)]
    return ClosureDatum(B, phi.group, vals)


# --- resolvent algebra ----------------------------------------------------------------------

def _require_capable(R: Ring):
    if not R.linear_algebra_capable:
        raise CapabilityError(f"quotient presentations need a field, Z or Z/m, not {R}")


def symmetric_relations(A: FreeAlgebra, G: PermGroup) -> np.ndarray:
    """Rows ``α - Φ(α)·1`` over the ``S_n`` orbit basis, in G-orbit coordinates."""
    R = A.ring
    n = A.rank
    inv = invariant_ring(A, G)
    F = ferrand_table(A)
    to_s = coarsening(G, symmetric(n), n)
    X = arrays.zeros(R, (F.basis.size, inv.size))
    one = arrays.lower(R, 1)
    for o, s in enumerate(to_s):
        X[s, o] = one
    X = arrays.normalize(R, X - np.multiply.outer(F.values, inv.unit))
    return X


class ResolventAlgebra:
    """``(A^{⊗n})^G ⊗_{(A^{⊗n})^{S_n}} R`` with the reduction of each ``e_O``."""

    def __init__(self, A: FreeAlgebra, G: PermGroup):
        _require_capable(A.ring)
        self.algebra = A
        self.group = G
        self.ring = A.ring
        inv = invariant_ring(A, G)
        self.invariants = inv
        X = symmetric_relations(A, G)
        rels = arrays.normalize(self.ring, np.tensordot(X, inv.struct, axes=([1], [0])))
        self.quotient = QuotientAlgebra(inv, rels.reshape(-1, inv.size))
        eye = arrays.zeros(self.ring, (inv.size, inv.size))
        for i in range(inv.size):
            eye[i, i] = arrays.lower(self.ring, 1)
        self.reduction = self.quotient.reduce(eye)

    @property
    def rank(self) -> int:
        return self.quotient.rank

    def class_of(self, x) -> np.ndarray:
        """Quotient coordinates of an invariant element."""
        return self.quotient.reduce(np.asarray(getattr(x, "coords", x)))

    def datum_from_hom(self, x) -> ClosureDatum:
        """The datum ``e_O ↦ h(class of e_O)`` for a map ``h`` given on generators."""
        R = self.ring
        vals = arrays.normalize(R, np.dot(self.reduction, np.asarray(x)) if self.rank else
                                arrays.zeros(R, (self.invariants.size,)))
        return ClosureDatum(self.algebra, self.group, vals)

    def homs(self) -> list:
        return self.quotient.homs_to_ring()

    def data(self) -> list:
        return [self.datum_from_hom(x) for x in self.homs()]

    def char_poly(self, x):
        """Characteristic polynomial of the class of an invariant element."""
        return self.quotient.char_poly(self.class_of(x))

    def __repr__(self):
        return f"ResolventAlgebra({self.group}, rank {self.rank} over {self.ring})"


_RESOLVENT_CACHE: dict = {}


def resolvent_algebra(A: FreeAlgebra, G: PermGroup) -> ResolventAlgebra:
    key = (id(A), G.degree, G.element_set)
    hit = _RESOLVENT_CACHE.get(key)
    if hit is not None and hit[0] is A:
        return hit[1]
    res = ResolventAlgebra(A, G)
    _RESOLVENT_CACHE[key] = (A, res)
    return res


def enumerate_closure_data(A: FreeAlgebra, G: PermGroup, check: bool = True) -> list:
    """Every G-closure datum of ``A``, as pullbacks of maps out of the resolvent algebra."""
    data = resolvent_algebra(A, G).data()
    if check:
        for d in data:
            res = verify_closure_datum(d)
            if not res:
                raise NotAClosureDatum(f"enumerated datum fails: {res.message}", law=res.law, where=res.where)
    return data


# --- closure algebra -------------------------------------------------------------------------

def closure_generators(phi: ClosureDatum, T: TensorAlgebra) -> np.ndarray:
    """Rows ``e_O - φ(e_O)·1`` in tensor coordinates."""
    R = phi.ring
    ob = phi.basis
    rows = arrays.zeros(R, (ob.size, T.dim))
    one = arrays.lower(R, 1)
    rows[ob.orbit_of, np.arange(T.dim)] = one
    rows = arrays.normalize(R, rows - np.multiply.outer(phi.values, T.unit))
    return rows


def basis_multiples(T: TensorAlgebra, rows) -> np.ndarray:
    """``θ_I · g`` for every basis tensor ``θ_I`` and row ``g``: shape ``(len(rows)·dim, dim)``."""
    R = T.ring
    n = T.power
    c = T.base.struct
    rows = np.asarray(rows)
    g = rows.shape[0]
    Y = rows.reshape((g,) + T.shape)
    for _ in range(n):
        # contract the next untouched slot index j with c[i, j, k]
        Y = arrays.normalize(R, np.tensordot(Y, c, axes=([1], [1])))
    # axes are now [g, i_1, k_1, ..., i_n, k_n]
    perm = [0] + [1 + 2 * s for s in range(n)] + [2 + 2 * s for s in range(n)]
    Y = np.transpose(Y, perm)
    return Y.reshape(g * T.dim, T.dim)


def check_closure_guard(n: int, guard_n: int | None = None) -> int:
    """Raise :class:`GuardError` when a rank-``n`` closure algebra is over the limit; returns the limit."""
    limit = CLOSURE_GUARD_N if guard_n is None else guard_n
    if n > limit:
        raise GuardError(f"closure algebra of a rank-{n} algebra needs an ambient of dimension {n}^{n}; "
                         f"raise the guard to allow it", limit=limit)
    return limit


def closure_algebra(phi: ClosureDatum, guard_n: int | None = None, chunk: int = 16) -> QuotientAlgebra:
    """``A^{⊗n} / (b - φ(b) : b ∈ (A^{⊗n})^G)`` as a presented quotient."""
    R = phi.ring
    _require_capable(R)
    n = phi.algebra.rank
    limit = check_closure_guard(n, guard_n)
    T = TensorAlgebra(phi.algebra, guard_n=max(limit, n))
    gens = closure_generators(phi, T)
    span = None
    for start in range(0, gens.shape[0], chunk):
        block = basis_multiples(T, gens[start:start + chunk])
        if span is not None:
            block = np.concatenate([span, block.astype(span.dtype)], axis=0)
        span = QuotientModule.from_relations(R, block, T.dim).echelon
    if span is None:
        span = arrays.zeros(R, (0, T.dim))
    Q = QuotientAlgebra(T, span)
    Q.datum = phi
    return Q


def normalizer_action(phi: ClosureDatum) -> dict:
    """``σ ↦ σ·φ`` for ``σ`` in the normalizer of ``G`` (keys are cycle strings)."""
    return {format_perm(s): act(s, phi) for s in phi.group.normalizer()}


def trivially_acting(phi: ClosureDatum) -> bool:
    """Every element of ``G`` fixes the datum."""
    return all(act(g, phi) == phi for g in phi.group.elements)



# --- pullback along algebra maps ---------------------------------------------------------------

def tensor_power_map(hom, power: int, X) -> np.ndarray:
    """Apply ``f^{⊗power}`` to tensors ``X`` (flat coordinates on the last axis)."""
    src, tgt = hom.source, hom.target
    R = src.ring
    M = hom.images  # row i = f(θ_i)
    X = np.asarray(X)
    lead = X.shape[:-1]
    Y = X.reshape(lead + (src.rank,) * power)
    k = len(lead)
    for s in range(power):
        Y = arrays.normalize(R, np.tensordot(Y, M, axes=([k + s], [0])))
        Y = np.moveaxis(Y, -1, k + s)
    return Y.reshape(lead + (tgt.rank ** power,))


def pullback(phi: ClosureDatum, hom) -> ClosureDatum:
    """``φ ∘ f^{⊗n}`` for a universally norm-preserving ``f: A → B`` of equal rank."""
    A, B = hom.source, hom.target
    if phi.algebra.rank != B.rank or A.rank != B.rank:
        raise DimensionError("pullback needs algebras of equal rank")
    n = A.rank
    R = A.ring
    ob = orbit_basis(phi.group, n)
    # expand every orbit sum of A, push through f in each slot, read target orbit coordinates
    E = arrays.zeros(R, (ob.size, ob.dim))
    E[ob.orbit_of, np.arange(ob.dim)] = arrays.lower(R, 1)
    img = tensor_power_map(hom, n, E)
    coords = img[:, np.asarray(ob.reps, dtype=np.int64)]
    vals = arrays.normalize(R, np.dot(coords, phi.values))
    return ClosureDatum(A, phi.group, vals)
