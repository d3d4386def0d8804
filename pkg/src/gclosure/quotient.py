"""Quotients of free algebras by R-submodules that are ideals.

A :class:`QuotientAlgebra` is presented as ``⊕ R/(d_i) g_i`` (see
:class:`~gclosure.normal_forms.QuotientModule`) together with structure
constants ``g_i g_j = Σ_k c[i, j, k] g_k`` that are computed by multiplying
lifted representatives in the ambient algebra and reducing.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import arrays
from .algebra import FreeAlgebra, find_algebra_homs
from .errors import CapabilityError, ConsistencyError, GuardError
from .normal_forms import QuotientModule
from .rings import Integers, IntegersMod, RingElem

IDEMPOTENT_SEARCH_LIMIT = 10**7


class QuotientAlgebra:
    """``ambient / span(relations)`` with induced multiplication.

    ``ambient`` must provide ``ring``, ``dim``, ``unit``, ``mul_arrays(u, v)``
    and ``generator_products(rows)`` (products of rows with a set of algebra
    generators).  The relation span must be an ideal; this is asserted by
    checking closure under the generators.
    """

    def __init__(self, ambient, relations, check: bool = True):
        self.ambient = ambient
        self.ring = ambient.ring
        self.module = QuotientModule.from_relations(self.ring, relations, ambient.dim)
        self.rank = self.module.rank
        self.orders = self.module.orders
        if check:
            self.check_ideal()
        self._compute_structure()

    # -- presentation -----------------------------------------------------------
    def _compute_structure(self):
        R = self.ring
        k = self.rank
        lifts = self.module.lift(_identity(R, k)) if k else arrays.zeros(R, (0, self.ambient.dim))
        self.lifts = lifts
        struct = arrays.zeros(R, (k, k, k))
        for i in range(k):
            for j in range(i, k):
                w = self.reduce(self.ambient.mul_arrays(lifts[i], lifts[j]))
                struct[i, j] = w
                struct[j, i] = w
        self.struct = struct
        self.unit = self.reduce(self.ambient.unit)

    def span_rows(self) -> np.ndarray:
        """Rows spanning the relation module (echelon form)."""
        return self.module.echelon

    def check_ideal(self):
        rows = self.span_rows()
        if rows.shape[0] == 0:
            return
        prods = self.ambient.generator_products(rows)
        flat = prods.reshape(-1, self.ambient.dim)
        inside = self.module.contains(flat)
        if not np.all(inside):
            raise ConsistencyError("relation span is not closed under multiplication")

    def reduce(self, X) -> np.ndarray:
        """Quotient coordinates of ambient vector(s)."""
        return self.module.reduce(X)

    def mul_arrays(self, u, v):
        R = self.ring
        k = self.rank
        t = arrays.normalize(R, np.asarray(u) @ self.struct.reshape(k, k * k)).reshape(np.shape(u)[:-1] + (k, k))
        if t.dtype != object:
            w = np.einsum("...j,...jk->...k", np.asarray(v), t)
        else:
            w = np.sum(np.asarray(v, dtype=object)[..., :, None] * t, axis=-2)
        return self._reduce_coords(arrays.normalize(R, w))

    def _reduce_coords(self, Z):
        Z = np.asarray(Z)
        if not any(self.orders):
            return Z
        Z = Z.copy()
        for i, d in enumerate(self.orders):
            if d:
                Z[..., i] = Z[..., i] % d
        return Z

    @property
    def is_free(self) -> bool:
        return all(d == 0 for d in self.orders)

    @property
    def torsion(self) -> list:
        return [d for d in self.orders if d]

    def as_free_algebra(self) -> FreeAlgebra:
        if not self.is_free:
            raise CapabilityError("quotient has torsion; it is not a free algebra")
        return FreeAlgebra(self.ring, self.struct, self.unit, names=[f"g{i}" for i in range(self.rank)], check=False)

    def element(self, coords) -> np.ndarray:
        return self._reduce_coords(arrays.from_elems(self.ring, list(coords)))

    def basis(self, i: int) -> np.ndarray:
        return _identity(self.ring, self.rank)[i]

    def size(self) -> int:
        return self.module.size()

    def __repr__(self):
        tors = f", torsion {self.torsion}" if self.torsion else ""
        return f"QuotientAlgebra(rank {self.rank} over {self.ring}{tors})"

    # -- maps out ----------------------------------------------------------------
    def homs_to_ring(self) -> list:
        """All R-algebra maps to ``R``, as image vectors of the generators."""
        return find_homs_to_ring(self.struct, self.unit, self.orders, self.ring)

    def char_poly(self, z):
        """Characteristic polynomial of multiplication by ``z`` (free quotients)."""
        return self.as_free_algebra().char_poly(self.as_free_algebra().element(z))

    def elements(self):
        """Every element (enumerable ring), as coordinate arrays."""
        R = self.ring
        if not R.enumerable:
            raise CapabilityError(f"{R} is not enumerable")
        card = R.cardinality()
        ranges = [range(d) if d else range(card) for d in self.orders]
        for combo in itertools.product(*ranges):
            yield arrays.from_elems(R, list(combo)) if combo else arrays.zeros(R, (0,))


def _identity(R, k):
    eye = arrays.zeros(R, (k, k))
    for i in range(k):
        eye[i, i] = arrays.lower(R, 1)
    return eye


def find_homs_to_ring(struct, unit, orders, R) -> list:
    """Vectors ``x`` with ``d_i x_i = 0``, ``Σ u_i x_i = 1``, ``x_i x_j = Σ_k c_ijk x_k``."""
    k = len(orders)
    if k == 0:
        return []
    if R.enumerable:
        m = arrays.small_modulus(R)
        card = R.cardinality()
        if card ** k > 10**8:
            raise GuardError(f"hom search space {card}^{k} exceeds 10^8", limit=10**8)
        out = []
        if m is not None:
            chunk = 200000
            total = card ** k
            S = np.asarray(struct, dtype=np.int64)
            u = np.asarray(unit, dtype=np.int64)
            for start in range(0, total, chunk):
                idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
                X = np.empty((idx.size, k), dtype=np.int64)
                rest = idx.copy()
                for d in range(k - 1, -1, -1):
                    X[:, d] = rest % card
                    rest //= card
                ok = (X @ u) % m == 1
                for i, d in enumerate(orders):
                    if d:
                        ok &= (X[:, i] * d) % m == 0
                for i in range(k):
                    for j in range(i, k):
                        lhs = (X[:, i] * X[:, j]) % m
                        rhs = (X @ S[i, j]) % m
                        ok &= lhs == rhs
                        if not ok.any():
                            break
                out.extend(X[c].copy() for c in np.flatnonzero(ok))
            return out
        elems = list(R.elements())
        for combo in itertools.product(elems, repeat=k):
            if _is_hom_vector(struct, unit, orders, R, combo):
                out.append(arrays.from_elems(R, list(combo)))
        return out
    if any(orders):
        raise CapabilityError("hom search on a torsion quotient over a non-enumerable ring")
    A = FreeAlgebra(R, struct, unit, check=False)
    return [h.images[:, 0].copy() for h in find_algebra_homs(A, R)]


def _is_hom_vector(struct, unit, orders, R, xs) -> bool:
    k = len(xs)
    c = arrays.to_elems(R, struct)
    u = arrays.to_elems(R, unit)
    if sum((a * b for a, b in zip(u, xs)), R.zero) != R.one:
        return False
    for i, d in enumerate(orders):
        if d and not (xs[i] * d).is_zero():
            return False
    for i in range(k):
        for j in range(i, k):
            rhs = sum((c[i][j][l] * xs[l] for l in range(k)), R.zero)
            if xs[i] * xs[j] != rhs:
                return False
    return True


# --- faithfulness and idempotents ------------------------------------------------------

@dataclass(frozen=True)
class FaithfulResult:
    """Whether ``R → Q`` is injective; ``kernel`` generates the kernel ideal."""

    faithful: bool
    kernel: RingElem | None = None
    description: str = ""

    def __bool__(self):
        return self.faithful


def is_faithful(Q: QuotientAlgebra) -> FaithfulResult:
    """Decide whether no nonzero element of ``R`` acts as zero on ``Q``."""
    R = Q.ring
    z = [arrays.lift(R, x) for x in Q.unit]
    if R.is_field:
        nonzero = any(not x.is_zero() for x in z)
        if nonzero:
            return FaithfulResult(True, None, "nonzero algebra over a field")
        return FaithfulResult(False, R.one, "zero algebra; kernel is all of R")
    if isinstance(R, Integers):
        if any(d == 0 and not x.is_zero() for d, x in zip(Q.orders, z)):
            return FaithfulResult(True, None, "unit has infinite additive order")
        k = 1
        for d, x in zip(Q.orders, z):
            if d:
                k = math.lcm(k, d // math.gcd(x.v, d))
            elif not x.is_zero():
                k = 0
        if all(d == 0 for d in Q.orders) and all(x.is_zero() for x in z):
            k = 1
        return FaithfulResult(False, R(k), f"kernel generated by {k}")
    if isinstance(R, IntegersMod):
        m = R.m
        k = 1
        for d, x in zip(Q.orders, z):
            dd = d if d else m
            k = math.lcm(k, dd // math.gcd(x.v % dd, dd))
        k = math.gcd(k, m)
        if k % m == 0:
            return FaithfulResult(True, None, "annihilator of the unit is zero")
        return FaithfulResult(False, R(k), f"not faithful; kernel contains {k}")
    raise CapabilityError(f"faithfulness test not available over {R}")


def idempotents(Q: QuotientAlgebra) -> list:
    """All idempotents of ``Q`` (enumerable rings; exhaustive with a guard)."""
    R = Q.ring
    if not R.enumerable:
        raise CapabilityError(f"idempotent search needs an enumerable ring, not {R}")
    total = Q.size()
    if total > IDEMPOTENT_SEARCH_LIMIT:
        raise GuardError(f"idempotent search over {total} elements exceeds the guard",
                         limit=IDEMPOTENT_SEARCH_LIMIT)
    m = arrays.small_modulus(R)
    k = Q.rank
    if m is not None:
        card = R.cardinality()
        mods = [d if d else card for d in Q.orders]
        out = []
        chunk = 100000
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            X = np.empty((idx.size, k), dtype=np.int64)
            rest = idx.copy()
            for d in range(k - 1, -1, -1):
                X[:, d] = rest % mods[d]
                rest //= mods[d]
            sq = Q.mul_arrays(X, X)
            ok = np.all(sq == Q._reduce_coords(X), axis=1)
            out.extend(X[c].copy() for c in np.flatnonzero(ok))
        return out
    return [e for e in Q.elements() if arrays.arrays_equal(R, Q.mul_arrays(e, e), e)]


def primitive_idempotents(Q: QuotientAlgebra) -> list:
    """Nonzero idempotents with no proper nonzero idempotent below them."""
    R = Q.ring
    ids = [e for e in idempotents(Q) if not arrays.is_zero_array(R, e)]
    prim = []
    for e in ids:
        below = [f for f in ids if not arrays.arrays_equal(R, f, e)
                 and arrays.arrays_equal(R, Q.mul_arrays(f, e), f)]
        if not below:
            prim.append(e)
    return prim


def check_orthogonal_decomposition(Q: QuotientAlgebra, es) -> bool:
    """Pairwise orthogonal idempotents summing to ``1``."""
    R = Q.ring
    total = arrays.zeros(R, (Q.rank,))
    for i, e in enumerate(es):
        total = Q._reduce_coords(arrays.normalize(R, total + e))
        for f in es[i + 1:]:
            if not arrays.is_zero_array(R, Q.mul_arrays(e, f)):
                return False
    return arrays.arrays_equal(R, total, Q.unit)
