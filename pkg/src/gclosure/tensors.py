"""Tensor powers ``A^{⊗n}``, permutation actions and invariant subrings.

A tensor in ``A^{⊗n}`` is a coordinate array over the basis tensors
``θ_I = θ_{i_1} ⊗ ... ⊗ θ_{i_n}``, indexed by tuples ``I ∈ [n]^n`` in
row-major order (so index order is lexicographic tuple order).

``σ`` acts by moving the factor in slot ``p`` to slot ``σ(p)``, which sends the
basis tensor with index tuple ``I`` to the one with index tuple
``(I_{σ^{-1}(1)}, ..., I_{σ^{-1}(n)})``.  This is a left action by ring
automorphisms.

The G-invariant subring has the module basis of orbit sums ``e_O = Σ_{I∈O} θ_I``
over the G-orbits ``O`` of index tuples, ordered by their lexicographically
least member.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import arrays
from .algebra import AlgElem, FreeAlgebra
from .errors import DimensionError, GuardError, NotInvariantError
from .groups import PermGroup, alternating, inverse, symmetric

MAX_TENSOR_DIM = 65536
MAX_POWER = 5


def check_tensor_guard(rank: int, power: int, guard_n: int | None = None):
    limit = MAX_POWER if guard_n is None else guard_n
    if power > limit or rank ** power > MAX_TENSOR_DIM:
        raise GuardError(
            f"tensor power {rank}^{power} exceeds the guard (n <= {limit}, dimension <= {MAX_TENSOR_DIM})",
            limit=limit,
        )


class TensorAlgebra:
    """``A^{⊗n}`` for a free algebra ``A`` of rank ``r`` (default ``n = r``)."""

    def __init__(self, A: FreeAlgebra, power: int | None = None, guard_n: int | None = None):
        self.base = A
        self.ring = A.ring
        self.rank = A.rank
        self.power = A.rank if power is None else power
        check_tensor_guard(self.rank, self.power, guard_n)
        self.dim = self.rank ** self.power
        self.shape = (self.rank,) * self.power

    def __repr__(self):
        return f"TensorAlgebra({self.base!r}^{self.power})"

    # -- basis -----------------------------------------------------------------
    def index(self, tup) -> int:
        k = 0
        for i in tup:
            k = k * self.rank + i
        return k

    def tuple_of(self, k: int) -> tuple:
        return tuple(int(x) for x in np.unravel_index(k, self.shape)) if self.power else ()

    def all_tuples(self) -> np.ndarray:
        """``(dim, power)`` int array of index tuples in row-major order."""
        grids = np.indices(self.shape).reshape(self.power, -1)
        return grids.T.copy()

    # -- elements ----------------------------------------------------------------
    def element(self, coords) -> "TensorElem":
        arr = arrays.normalize(self.ring, np.asarray(coords).reshape(self.dim).copy()) \
            if isinstance(coords, np.ndarray) else arrays.from_elems(self.ring, list(coords))
        return TensorElem(self, arr)

    @property
    def zero(self) -> "TensorElem":
        return TensorElem(self, arrays.zeros(self.ring, (self.dim,)))

    @property
    def one(self) -> "TensorElem":
        return self.pure([self.base.one] * self.power)

    def pure(self, factors) -> "TensorElem":
        """``a_1 ⊗ ... ⊗ a_n``."""
        if len(factors) != self.power:
            raise DimensionError(f"need {self.power} tensor factors, got {len(factors)}")
        out = None
        for a in factors:
            v = a.coords
            out = v if out is None else arrays.normalize(self.ring, np.multiply.outer(out, v))
        return TensorElem(self, arrays.normalize(self.ring, np.asarray(out).reshape(self.dim)))

    def basis_tensor(self, tup) -> "TensorElem":
        v = arrays.zeros(self.ring, (self.dim,))
        v[self.index(tup)] = arrays.lower(self.ring, 1)
        return TensorElem(self, v)

    def mul_arrays(self, u, v):
        """Product of two tensors given as flat coordinate arrays."""
        n = self.power
        R = self.ring
        X = arrays.normalize(R, np.multiply.outer(np.asarray(u).reshape(self.shape), np.asarray(v).reshape(self.shape)))
        c = self.base.struct
        for s in range(n):
            X = arrays.normalize(R, np.tensordot(X, c, axes=([0, n - s], [0, 1])))
        return np.asarray(X).reshape(self.dim)

    def permute_array(self, sigma, v):
        """Coordinates of ``σ·v`` for a flat coordinate array ``v``."""
        sigma = tuple(sigma)
        if len(sigma) != self.power:
            raise DimensionError(f"permutation of degree {len(sigma)} acting on a {self.power}-fold tensor")
        t = np.asarray(v).reshape(self.shape)
        return np.transpose(t, inverse(sigma)).reshape(self.dim).copy()

    @property
    def unit(self) -> np.ndarray:
        return self.one.coords

    def generator_products(self, rows) -> np.ndarray:
        """Products of each row with every slot generator ``θ_j^{(s)}``.

        Returns an array of shape ``(power * rank, len(rows), dim)``.
        """
        R = self.ring
        rows = np.asarray(rows)
        r = rows.shape[0]
        X = rows.reshape((r,) + self.shape)
        c = self.base.struct
        out = []
        for s in range(self.power):
            for j in range(self.rank):
                L = c[:, j, :]  # θ_i θ_j = Σ_k L[i, k] θ_k
                Y = arrays.normalize(R, np.tensordot(X, L, axes=([s + 1], [0])))
                Y = np.moveaxis(Y, -1, s + 1)
                out.append(Y.reshape(r, self.dim))
        return np.stack(out) if out else arrays.zeros(R, (0, r, self.dim))

    def as_algebra(self) -> FreeAlgebra:
        """The tensor power as a FreeAlgebra (materialized structure constants)."""
        if self.dim > 81:
            raise GuardError(f"materializing {self.dim}^3 structure constants is not supported", limit=81)
        N = self.dim
        struct = arrays.zeros(self.ring, (N, N, N))
        eye = [self.basis_tensor(self.tuple_of(k)).coords for k in range(N)]
        for i in range(N):
            for j in range(i, N):
                w = self.mul_arrays(eye[i], eye[j])
                struct[i, j] = w
                struct[j, i] = w
        return FreeAlgebra(self.ring, struct, self.one.coords, check=False)


class TensorElem:
    """An element of a :class:`TensorAlgebra`."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: TensorAlgebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _other(self, other):
        if isinstance(other, TensorElem):
            return other
        return self.algebra.one * other

    def __add__(self, other):
        o = self._other(other)
        return TensorElem(self.algebra, arrays.normalize(self.algebra.ring, self.coords + o.coords))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return TensorElem(self.algebra, arrays.normalize(self.algebra.ring, self.coords - o.coords))

    def __neg__(self):
        return TensorElem(self.algebra, arrays.normalize(self.algebra.ring, -self.coords))

    def __mul__(self, other):
        if isinstance(other, TensorElem):
            return TensorElem(self.algebra, self.algebra.mul_arrays(self.coords, other.coords))
        return TensorElem(self.algebra, arrays.scalar_mul(self.algebra.ring, other, self.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._other(other)
        return arrays.arrays_equal(self.algebra.ring, self.coords, o.coords)

    def __hash__(self):
        return hash(self.algebra.dim)

    def elems(self) -> list:
        return arrays.to_elems(self.algebra.ring, self.coords)

    def support(self) -> dict:
        """``{index tuple: coefficient}`` for the nonzero coordinates."""
        T = self.algebra
        return {T.tuple_of(k): c for k, c in enumerate(self.elems()) if not c.is_zero()}

    def __repr__(self):
        items = ", ".join(f"{tuple(i + 1 for i in t)}: {c}" for t, c in self.support().items())
        return f"TensorElem({{{items}}})"


def perm_action(sigma, t: TensorElem) -> TensorElem:
    """``σ·t``: the factor in slot ``p`` moves to slot ``σ(p)``."""
    return TensorElem(t.algebra, t.algebra.permute_array(sigma, t.coords))


def conjugate_embed(a: AlgElem, i: int, T: TensorAlgebra | None = None) -> TensorElem:
    """``1 ⊗ ... ⊗ a ⊗ ... ⊗ 1`` with ``a`` in slot ``i`` (1-based)."""
    A = a.algebra
    T = T or tensor_algebra(A)
    if not 1 <= i <= T.power:
        raise DimensionError(f"slot {i} out of range 1..{T.power}")
    factors = [A.one] * T.power
    factors[i - 1] = a
    return T.pure(factors)


_TENSOR_CACHE: dict = {}


def tensor_algebra(A: FreeAlgebra, guard_n: int | None = None) -> TensorAlgebra:
    key = id(A)
    hit = _TENSOR_CACHE.get(key)
    if hit is not None and hit[0] is A:
        return hit[1]
    T = TensorAlgebra(A, guard_n=guard_n)
    _TENSOR_CACHE[key] = (A, T)
    return T


# --- orbit bases ------------------------------------------------------------------

class OrbitBasis:
    """G-orbits of index tuples in ``[r]^n``, ordered by least member.

    ``orbit_of[k]`` is the orbit number of tuple index ``k``; ``reps[o]`` the
    least tuple index in orbit ``o``.
    """

    def __init__(self, G: PermGroup, rank: int):
        self.group = G
        self.rank = rank
        self.power = G.degree
        self.dim = rank ** self.power
        if self.dim > MAX_TENSOR_DIM:
            raise GuardError(f"{rank}^{self.power} index tuples exceed {MAX_TENSOR_DIM}", limit=MAX_TENSOR_DIM)
        shape = (rank,) * self.power
        idx = np.arange(self.dim).reshape(shape)
        least = idx.reshape(-1).copy()
        for g in G.elements:
            moved = np.transpose(idx, inverse(g)).reshape(-1)
            # moved[k] = index of the tuple g^{-1}·I_k; G is a group so this
            # runs over the whole orbit of I_k as g does
            np.minimum(least, moved, out=least)
        reps, orbit_of = np.unique(least, return_inverse=True)
        self.reps = [int(r) for r in reps]
        self.orbit_of = orbit_of.reshape(-1).astype(np.int64)
        self.size = len(self.reps)
        self.sizes = np.bincount(self.orbit_of, minlength=self.size)
        order = np.argsort(self.orbit_of, kind="stable")
        self.sorted_members = order
        self.starts = np.concatenate([[0], np.cumsum(self.sizes)[:-1]]).astype(np.int64)

    def __len__(self):
        return self.size

    def rep_tuple(self, o: int) -> tuple:
        return tuple(int(x) for x in np.unravel_index(self.reps[o], (self.rank,) * self.power))

    def members(self, o: int) -> list:
        s = self.starts[o]
        return [int(k) for k in self.sorted_members[s:s + self.sizes[o]]]

    def orbit_index(self, tup) -> int:
        k = 0
        for i in tup:
            k = k * self.rank + i
        return int(self.orbit_of[k])

    def indicator(self, ring) -> np.ndarray:
        """``(dim, size)`` 0/1 matrix with ``S[I, O] = 1`` iff ``I ∈ O``."""
        S = arrays.zeros(ring, (self.dim, self.size))
        one = arrays.lower(ring, 1)
        for k, o in enumerate(self.orbit_of):
            S[k, o] = one
        return S

    def sum_over_orbits(self, ring, v):
        """``Σ_{I∈O} v[I]`` for every orbit (first axis of ``v``)."""
        v = np.asarray(v)
        perm = v[self.sorted_members]
        if perm.dtype != object:
            return arrays.normalize(ring, np.add.reduceat(perm, self.starts, axis=0))
        out = []
        for o in range(self.size):
            s = self.starts[o]
            chunk = perm[s:s + self.sizes[o]]
            acc = chunk[0]
            for x in chunk[1:]:
                acc = acc + x
            out.append(acc)
        return arrays.normalize(ring, np.array(out, dtype=object) if v.ndim == 1 else np.stack(out))

    def rep_label(self, o: int) -> str:
        return "(" + ",".join(str(i + 1) for i in self.rep_tuple(o)) + ")"

    def label_index(self, label: str) -> int:
        body = label.strip().strip("()")
        tup = tuple(int(x) - 1 for x in body.split(",")) if body else ()
        if len(tup) != self.power or any(not 0 <= x < self.rank for x in tup):
            raise ValueError(f"bad orbit label {label!r}")
        o = self.orbit_index(tup)
        return o


_ORBIT_CACHE: dict = {}


def orbit_basis(G: PermGroup, rank: int) -> OrbitBasis:
    key = (G.degree, G.element_set, rank)
    ob = _ORBIT_CACHE.get(key)
    if ob is None:
        ob = OrbitBasis(G, rank)
        _ORBIT_CACHE[key] = ob
    return ob


# --- invariant rings ----------------------------------------------------------------

class InvariantRing:
    """``(A^{⊗n})^G`` with the orbit-sum basis and its structure constants."""

    def __init__(self, A: FreeAlgebra, G: PermGroup, guard_n: int | None = None):
        if G.degree != A.rank:
            raise DimensionError(f"group degree {G.degree} differs from algebra rank {A.rank}")
        self.algebra = A
        self.group = G
        self.ring = A.ring
        self.tensor = TensorAlgebra(A, guard_n=guard_n)
        self.basis = orbit_basis(G, A.rank)
        self.size = self.basis.size
        self._struct = None
        self._unit = None

    def __repr__(self):
        return f"InvariantRing({self.algebra!r}, {self.group})"

    @property
    def unit(self) -> np.ndarray:
        if self._unit is None:
            self._unit = self.coords_of(self.tensor.one)
        return self._unit

    @property
    def struct(self) -> np.ndarray:
        """``c[O, P, Q]``: coefficient of ``e_Q`` in ``e_O e_P``."""
        if self._struct is None:
            self._struct = self._structure_constants()
        return self._struct

    def _structure_constants(self):
        R = self.ring
        ob = self.basis
        n, r = self.tensor.power, self.tensor.rank
        c = self.algebra.struct
        S = ob.indicator(R).reshape((r,) * n + (ob.size,))
        out = arrays.zeros(R, (ob.size, ob.size, ob.size))
        for q in range(ob.size):
            qt = ob.rep_tuple(q)
            # (K S) with K = kron_s C_{q_s},  C_k[i, j] = c[i, j, k]
            X = S
            for s in range(n):
                Cq = c[:, :, qt[s]]
                X = arrays.normalize(R, np.tensordot(Cq, X, axes=([1], [s])))
                X = np.moveaxis(X, 0, s)
            KS = X.reshape(ob.dim, ob.size)
            out[:, :, q] = ob.sum_over_orbits(R, KS)
        return out

    # -- elements -------------------------------------------------------------------
    def element(self, coords) -> "InvariantElem":
        arr = arrays.normalize(self.ring, np.asarray(coords).copy()) if isinstance(coords, np.ndarray) \
            else arrays.from_elems(self.ring, list(coords))
        if arr.shape != (self.size,):
            raise DimensionError("coordinate vector has the wrong length")
        return InvariantElem(self, arr)

    def orbit_sum(self, o: int) -> "InvariantElem":
        v = arrays.zeros(self.ring, (self.size,))
        v[o] = arrays.lower(self.ring, 1)
        return InvariantElem(self, v)

    @property
    def one(self) -> "InvariantElem":
        return InvariantElem(self, self.unit.copy())

    def coords_of(self, t: TensorElem, check: bool = True) -> np.ndarray:
        """Orbit coordinates of a G-fixed tensor (read at representatives)."""
        ob = self.basis
        v = np.asarray(t.coords)
        coords = v[ob.reps]
        if check:
            expected = coords[ob.orbit_of]
            if not arrays.arrays_equal(self.ring, expected, v):
                R = self.ring
                for k in range(ob.dim):
                    a = arrays.lift(R, v[k])
                    b = arrays.lift(R, expected[k])
                    if a != b:
                        rep = ob.reps[ob.orbit_of[k]]
                        pair = (self.tensor.tuple_of(rep), self.tensor.tuple_of(k))
                        raise NotInvariantError(
                            f"tensor is not {self.group}-invariant: coefficients differ at "
                            f"{tuple(i + 1 for i in pair[0])} and {tuple(i + 1 for i in pair[1])}",
                            pair=pair,
                        )
        return arrays.normalize(self.ring, coords.copy())

    def expand(self, x: "InvariantElem") -> TensorElem:
        return TensorElem(self.tensor, np.asarray(x.coords)[self.basis.orbit_of].copy())

    def mul_arrays(self, u, v):
        R = self.ring
        N = self.size
        t = arrays.normalize(R, np.asarray(u) @ self.struct.reshape(N, N * N)).reshape(np.shape(u)[:-1] + (N, N))
        if t.dtype != object:
            return arrays.normalize(R, np.einsum("...j,...jk->...k", np.asarray(v), t))
        vv = np.asarray(v, dtype=object)
        return arrays.normalize(R, np.sum(vv[..., :, None] * t, axis=-2))

    @property
    def dim(self) -> int:
        return self.size

    def generator_products(self, rows) -> np.ndarray:
        """Products of each row with every orbit sum: shape ``(size, len(rows), size)``."""
        R = self.ring
        rows = np.asarray(rows)
        Y = arrays.normalize(R, np.tensordot(rows, self.struct, axes=([1], [0])))  # [r, P, Q]
        return np.transpose(Y, (1, 0, 2))

    def as_algebra(self) -> FreeAlgebra:
        names = [self.basis.rep_label(o) for o in range(self.size)]
        return FreeAlgebra(self.ring, self.struct, self.unit, names=names, check=False)


class InvariantElem:
    """An element of ``(A^{⊗n})^G`` as orbit-sum coordinates."""

    __slots__ = ("ring_", "coords")

    def __init__(self, ring_: InvariantRing, coords):
        self.ring_ = ring_
        self.coords = coords

    @property
    def basis(self) -> OrbitBasis:
        return self.ring_.basis

    def _other(self, other):
        if isinstance(other, InvariantElem):
            if other.ring_ is not self.ring_ and other.basis is not self.basis:
                raise DimensionError("invariant elements over different orbit bases")
            return other
        return self.ring_.one * other

    def __add__(self, other):
        o = self._other(other)
        return InvariantElem(self.ring_, arrays.normalize(self.ring_.ring, self.coords + o.coords))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return InvariantElem(self.ring_, arrays.normalize(self.ring_.ring, self.coords - o.coords))

    def __neg__(self):
        return InvariantElem(self.ring_, arrays.normalize(self.ring_.ring, -self.coords))

    def __mul__(self, other):
        if isinstance(other, InvariantElem):
            o = self._other(other)
            return InvariantElem(self.ring_, self.ring_.mul_arrays(self.coords, o.coords))
        return InvariantElem(self.ring_, arrays.scalar_mul(self.ring_.ring, other, self.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._other(other)
        return arrays.arrays_equal(self.ring_.ring, self.coords, o.coords)

    def __hash__(self):
        return hash(self.ring_.size)

    def elems(self) -> list:
        return arrays.to_elems(self.ring_.ring, self.coords)

    def expand(self) -> TensorElem:
        return self.ring_.expand(self)

    def __repr__(self):
        items = ", ".join(f"{self.basis.rep_label(o)}: {c}" for o, c in enumerate(self.elems()) if not c.is_zero())
        return f"InvariantElem({self.ring_.group}; {{{items}}})"


_INV_CACHE: dict = {}


def invariant_ring(A: FreeAlgebra, G: PermGroup, guard_n: int | None = None) -> InvariantRing:
    """Cached :class:`InvariantRing` for ``(A, G)``."""
    key = (id(A), G.degree, G.element_set)
    hit = _INV_CACHE.get(key)
    if hit is not None and hit[0] is A:
        return hit[1]
    inv = InvariantRing(A, G, guard_n=guard_n)
    _INV_CACHE[key] = (A, inv)
    return inv


def expand_invariant(t: TensorElem, G: PermGroup) -> InvariantElem:
    """Orbit-sum coordinates of a G-fixed tensor; raises if not fixed."""
    inv = invariant_ring(t.algebra.base, G)
    return InvariantElem(inv, inv.coords_of(t))


def elementary_tensor(a: AlgElem, k: int, T: TensorAlgebra | None = None) -> TensorElem:
    """``e_k(a^{(1)}, ..., a^{(n)})`` as a tensor."""
    A = a.algebra
    T = T or tensor_algebra(A)
    n = T.power
    if not 0 <= k <= n:
        raise DimensionError(f"k = {k} out of range 0..{n}")
    total = T.zero
    for subset in itertools.combinations(range(n), k):
        factors = [a if s in subset else A.one for s in range(n)]
        total = total + T.pure(factors)
    return total


def elementary_invariant(a: AlgElem, k: int) -> InvariantElem:
    """``e_k(a)`` over the ``S_n`` orbit basis."""
    A = a.algebra
    return expand_invariant(elementary_tensor(a, k), symmetric(A.rank))


def gamma_tensor(elems) -> TensorElem:
    A = elems[0].algebra
    T = tensor_algebra(A)
    if len(elems) != T.power:
        raise DimensionError(f"gamma takes {T.power} arguments, got {len(elems)}")
    total = T.zero
    for s in alternating(T.power).elements:
        total = total + T.pure([elems[s[i]] for i in range(T.power)])
    return total


def gamma(*elems):
    """``(γ, γ')`` over the ``A_n`` orbit basis.

    ``γ = Σ_{σ∈A_n} a_{σ(1)} ⊗ ... ⊗ a_{σ(n)}`` and ``γ'`` is its image under
    the transposition of the first two slots.
    """
    if len(elems) == 1 and isinstance(elems[0], (list, tuple)):
        elems = tuple(elems[0])
    g = gamma_tensor(list(elems))
    n = g.algebra.power
    An = alternating(n)
    t12 = tuple([1, 0] + list(range(2, n))) if n >= 2 else (0,)
    return expand_invariant(g, An), expand_invariant(perm_action(t12, g), An)


def transport_orbits(ob_from: OrbitBasis, sigma, ob_to: OrbitBasis) -> np.ndarray:
    """Orbit map ``O ↦ σ·O`` between orbit bases of ``G`` and ``σGσ^{-1}``."""
    shape = (ob_from.rank,) * ob_from.power
    idx = np.arange(ob_from.dim).reshape(shape)
    # tuple index k goes to moved[k] under σ
    moved = np.empty(ob_from.dim, dtype=np.int64)
    moved[np.transpose(idx, inverse(tuple(sigma))).reshape(-1)] = np.arange(ob_from.dim)
    out = np.empty(ob_from.size, dtype=np.int64)
    for o, rep in enumerate(ob_from.reps):
        out[o] = ob_to.orbit_of[moved[rep]]
    return out
