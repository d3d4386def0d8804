"""Free rank-n algebras given by structure constants.

An algebra ``A`` over a base ring ``R`` has basis ``θ_0, ..., θ_{n-1}`` and
structure constants ``c[i, j, k]`` with ``θ_i θ_j = Σ_k c[i, j, k] θ_k``.
Elements are coordinate vectors.  Characteristic polynomials are stored in the
alternating convention ``λ^n - s_1 λ^{n-1} + s_2 λ^{n-2} - ... + (-1)^n s_n``.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

from . import arrays
from .errors import CapabilityError, DimensionError, GuardError, HomomorphismError
from .matrices import Matrix, charpoly_coeffs, determinant
from .rings import PolyExt, Ring, RingElem, format_univariate, parse_univariate

HOM_SEARCH_LIMIT = 10**8


class MonicPoly:
    """A monic polynomial ``λ^n - s_1 λ^{n-1} + ... + (-1)^n s_n`` over a ring."""

    __slots__ = ("ring", "s")

    def __init__(self, ring: Ring, s):
        self.ring = ring
        self.s = tuple(ring(x) for x in s)

    @classmethod
    def from_coeffs(cls, ring: Ring, coeffs) -> "MonicPoly":
        """From low-to-high coefficients ``[c_0, ..., c_{n-1}, 1]``."""
        cs = [ring(c) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        if cs[-1] != ring.one:
            raise ValueError("polynomial is not monic")
        n = len(cs) - 1
        # coefficient of λ^{n-k} is (-1)^k s_k
        return cls(ring, [cs[n - k] if k % 2 == 0 else -cs[n - k] for k in range(1, n + 1)])

    @classmethod
    def parse(cls, ring: Ring, text: str, var: str = "x") -> "MonicPoly":
        return cls.from_coeffs(ring, parse_univariate(ring, text, var))

    @property
    def degree(self) -> int:
        return len(self.s)

    def coeffs(self) -> list:
        """Low-to-high coefficients, ending in 1."""
        n = self.degree
        out = [self.ring.one]
        for k in range(1, n + 1):
            out.append(self.s[k - 1] if k % 2 == 0 else -self.s[k - 1])
        return out[::-1]

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs()):
            acc = c if acc is None else acc * x + c
        return acc

    def __mul__(self, other: "MonicPoly") -> "MonicPoly":
        a, b = self.coeffs(), other.coeffs()
        out = [self.ring.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return MonicPoly.from_coeffs(self.ring, out)

    def __eq__(self, other):
        return isinstance(other, MonicPoly) and self.s == other.s

    def __hash__(self):
        return hash(self.s)

    def format(self, var: str = "x") -> str:
        return format_univariate(self.coeffs(), var)

    def __str__(self):
        return self.format("x")

    def __repr__(self):
        return f"MonicPoly({self.ring}, {self.format('x')})"

    def map(self, phi) -> "MonicPoly":
        """Apply a ring map to every coefficient."""
        return MonicPoly(phi.target, [phi(c) for c in self.s])


class FreeAlgebra:
    """A commutative, associative, unital free algebra of rank ``n``.

    ``struct`` is an ``(n, n, n)`` array (or nested list of ring elements);
    ``unit`` the coordinates of ``1``.  The algebra laws are checked on
    construction unless ``check=False``.
    """

    def __init__(self, ring: Ring, struct, unit, names=None, poly: MonicPoly | None = None, check: bool = True):
        self.ring = ring
        if isinstance(struct, np.ndarray):
            self.struct = arrays.normalize(ring, struct.copy())
        else:
            self.struct = arrays.from_elems(ring, struct)
        n = self.struct.shape[0]
        if self.struct.shape != (n, n, n):
            raise DimensionError(f"structure constants must be n x n x n, got {self.struct.shape}")
        self.rank = n
        self.unit = arrays.from_elems(ring, list(unit)) if not isinstance(unit, np.ndarray) else arrays.normalize(ring, unit.copy())
        self.names = list(names) if names else [f"e{i}" for i in range(n)]
        self.poly = poly
        if check:
            self.check_laws()

    # -- construction helpers ---------------------------------------------------
    def check_laws(self):
        R, c, n = self.ring, self.struct, self.rank
        if not arrays.arrays_equal(R, c, np.transpose(c, (1, 0, 2))):
            raise HomomorphismError("structure constants are not commutative")
        # (θ_i θ_j) θ_k = Σ_l c[i,j,l] θ_l θ_k
        flat = c.reshape(n, n * n)
        left = arrays.normalize(R, np.tensordot(c, c, axes=([2], [0])))  # [i, j, k, m]
        right = arrays.normalize(R, np.tensordot(c, c, axes=([2], [0]))).transpose(1, 2, 0, 3)  # (θ_j θ_k) θ_i
        if not arrays.arrays_equal(R, left, right):
            raise HomomorphismError("structure constants are not associative")
        um = arrays.normalize(R, (self.unit @ flat).reshape(n, n))
        eye = arrays.zeros(R, (n, n))
        for i in range(n):
            eye[i, i] = arrays.lower(R, 1)
        if not arrays.arrays_equal(R, um, eye):
            raise HomomorphismError("unit vector does not act as the identity")

    @cached_property
    def _flat(self):
        return self.struct.reshape(self.rank, self.rank * self.rank)

    def __repr__(self):
        if self.poly is not None:
            return f"FreeAlgebra({self.ring}[x]/({self.poly.format('x')}))"
        return f"FreeAlgebra(rank {self.rank} over {self.ring})"

    def __eq__(self, other):
        return (isinstance(other, FreeAlgebra) and self.ring == other.ring and self.rank == other.rank
                and arrays.arrays_equal(self.ring, self.struct, other.struct)
                and arrays.arrays_equal(self.ring, self.unit, other.unit))

    def __hash__(self):
        return hash((self.ring, self.rank))

    # -- elements ------------------------------------------------------------------
    def element(self, coords) -> "AlgElem":
        if isinstance(coords, np.ndarray):
            return AlgElem(self, arrays.normalize(self.ring, coords.copy()))
        return AlgElem(self, arrays.from_elems(self.ring, list(coords)))

    def basis(self, i: int) -> "AlgElem":
        v = arrays.zeros(self.ring, (self.rank,))
        v[i] = arrays.lower(self.ring, 1)
        return AlgElem(self, v)

    @property
    def one(self) -> "AlgElem":
        return AlgElem(self, self.unit.copy())

    @property
    def zero(self) -> "AlgElem":
        return AlgElem(self, arrays.zeros(self.ring, (self.rank,)))

    def gen(self) -> "AlgElem":
        """The element ``x`` of a monogenic algebra."""
        if self.poly is None:
            raise CapabilityError("algebra was not constructed as R[x]/(f)")
        return self.basis(1) if self.rank > 1 else self.element([-self.poly.coeffs()[0]])

    def parse(self, text: str) -> "AlgElem":
        """Parse a polynomial in ``x`` (monogenic) or in the basis names."""
        R = self.ring
        if self.poly is not None:
            cs = parse_univariate(R, text, "x")
            x = self.gen()
            acc = self.zero
            for c in reversed(cs):
                acc = acc * x + self.one * c
            return acc
        P = PolyExt(R, tuple(self.names))
        p = P.parse(text)
        acc = self.zero
        for e, c in P.terms(p):
            t = self.one * c
            for i, k in enumerate(e):
                for _ in range(k):
                    t = t * self.basis(i)
            acc = acc + t
        return acc

    def mul_arrays(self, u, v):
        """Product of coordinate arrays (last axis) via the structure constants."""
        R, n = self.ring, self.rank
        t = arrays.normalize(R, np.asarray(u) @ self._flat).reshape(np.shape(u)[:-1] + (n, n))
        return arrays.normalize(R, np.einsum("...j,...jk->...k", np.asarray(v), t) if t.dtype != object
                                else _obj_contract(v, t))

    # -- linear algebra of elements ------------------------------------------------
    def mult_matrix(self, a: "AlgElem") -> Matrix:
        """Matrix whose column ``j`` holds the coordinates of ``a·θ_j``."""
        n = self.rank
        t = arrays.normalize(self.ring, a.coords @ self._flat).reshape(n, n)  # [j, k]
        return Matrix(self.ring, arrays.to_elems(self.ring, t.T))

    def char_poly(self, a: "AlgElem") -> MonicPoly:
        c = charpoly_coeffs(self.mult_matrix(a))
        return MonicPoly.from_coeffs(self.ring, c[::-1])

    def trace(self, a: "AlgElem") -> RingElem:
        M = self.mult_matrix(a)
        t = self.ring.zero
        for i in range(self.rank):
            t = t + M[i, i]
        return t

    def norm(self, a: "AlgElem") -> RingElem:
        return determinant(self.mult_matrix(a))

    def gram_matrix(self) -> Matrix:
        n = self.rank
        rows = [[self.trace(self.basis(i) * self.basis(j)) for j in range(n)] for i in range(n)]
        return Matrix(self.ring, rows)

    def base_change(self, phi) -> "FreeAlgebra":
        """The algebra with every structure constant pushed through ``phi``."""
        T = phi.target
        struct = [[[phi(x) for x in row] for row in plane] for plane in arrays.to_elems(self.ring, self.struct)]
        unit = [phi(x) for x in arrays.to_elems(self.ring, self.unit)]
        poly = self.poly.map(phi) if self.poly is not None else None
        return FreeAlgebra(T, struct, unit, names=self.names, poly=poly, check=False)


def _obj_contract(v, t):
    v = np.asarray(v, dtype=object)
    return np.sum(v[..., :, None] * t, axis=-2)


class AlgElem:
    """An element of a :class:`FreeAlgebra`, stored as coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: FreeAlgebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _other(self, other):
        if isinstance(other, AlgElem):
            return other
        return self.algebra.one * other

    def __add__(self, other):
        o = self._other(other)
        return AlgElem(self.algebra, arrays.normalize(self.algebra.ring, self.coords + o.coords))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return AlgElem(self.algebra, arrays.normalize(self.algebra.ring, self.coords - o.coords))

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return AlgElem(self.algebra, arrays.normalize(self.algebra.ring, -self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return AlgElem(self.algebra, self.algebra.mul_arrays(self.coords, other.coords))
        return AlgElem(self.algebra, arrays.scalar_mul(self.algebra.ring, other, self.coords))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.algebra.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgElem):
            other = self._other(other)
        return arrays.arrays_equal(self.algebra.ring, self.coords, other.coords)

    def __hash__(self):
        return hash(tuple(str(x) for x in self.coords))

    def elems(self) -> list:
        return arrays.to_elems(self.algebra.ring, self.coords)

    def __str__(self):
        A = self.algebra
        if A.poly is not None:
            return format_univariate(self.elems(), "x")
        parts = [f"{c}*{nm}" if c != 1 else nm for c, nm in zip(self.elems(), A.names) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AlgElem({self})"


# --- constructors --------------------------------------------------------------------

def make_monogenic(R: Ring, f) -> FreeAlgebra:
    """``R[x]/(f)`` with basis ``1, x, ..., x^{n-1}``.

    ``f`` may be a :class:`MonicPoly`, a low-to-high coefficient list or text
    in the variable ``x``.
    """
    if isinstance(f, str):
        f = MonicPoly.parse(R, f, "x")
    elif not isinstance(f, MonicPoly):
        f = MonicPoly.from_coeffs(R, f)
    n = f.degree
    if n < 1:
        raise ValueError("monogenic algebras need deg f >= 1")
    cs = f.coeffs()
    # reduce x^k for k < 2n - 1 to coordinates
    powers = []
    cur = [R.one] + [R.zero] * (n - 1)
    if n == 1:
        cur = [R.one]
    for _ in range(2 * n - 1):
        powers.append(cur)
        # multiply by x: shift, then reduce x^n = -(c_0 + ... + c_{n-1} x^{n-1})
        top = cur[-1]
        nxt = [R.zero] + cur[:-1]
        nxt = [a - top * c for a, c in zip(nxt, cs[:-1])]
        cur = nxt
    struct = [[powers[i + j] for j in range(n)] for i in range(n)]
    unit = powers[0]
    names = ["1"] + ["x" if k == 1 else f"x^{k}" for k in range(1, n)]
    return FreeAlgebra(R, struct, unit, names=names, poly=f, check=False)


def trivial_algebra(R: Ring, n: int) -> FreeAlgebra:
    """``R^n`` with its basis of orthogonal idempotents."""
    struct = [[[1 if i == j == k else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    return FreeAlgebra(R, struct, [1] * n, names=[f"e{i}" for i in range(n)], check=False)


def make_product(*algebras: FreeAlgebra):
    """``A_1 × ... × A_k`` with its projections and block idempotents.

    Returns ``(A, projections, idempotents)``.
    """
    if not algebras:
        raise ValueError("empty product")
    R = algebras[0].ring
    if any(B.ring != R for B in algebras):
        raise ValueError("factors must share the base ring")
    N = sum(B.rank for B in algebras)
    struct = arrays.zeros(R, (N, N, N))
    unit = arrays.zeros(R, (N,))
    names = []
    offsets = []
    off = 0
    for idx, B in enumerate(algebras):
        n = B.rank
        struct[off:off + n, off:off + n, off:off + n] = B.struct
        unit[off:off + n] = B.unit
        names.extend(f"{nm}_{idx + 1}" if len(algebras) > 1 else nm for nm in B.names)
        offsets.append(off)
        off += n
    A = FreeAlgebra(R, struct, unit, names=names, check=False)
    A.blocks = [(o, B.rank) for o, B in zip(offsets, algebras)]
    A.factors = list(algebras)
    projections = []
    idempotents = []
    for o, B in zip(offsets, algebras):
        images = arrays.zeros(R, (N, B.rank))
        for i in range(B.rank):
            images[o + i, i] = arrays.lower(R, 1)
        projections.append(AlgHom(A, B, images))
        e = arrays.zeros(R, (N,))
        e[o:o + B.rank] = B.unit
        idempotents.append(AlgElem(A, e))
    return A, projections, idempotents


def ring_as_algebra(R: Ring) -> FreeAlgebra:
    """``R`` itself as a rank-1 algebra."""
    return FreeAlgebra(R, [[[1]]], [1], names=["1"], check=False)


# --- homomorphisms ----------------------------------------------------------------

class AlgHom:
    """An R-algebra map given by the images of the source basis.

    ``images`` is an ``(n_source, n_target)`` array, or a list of target
    elements.  Unit and multiplicativity are verified on construction.
    """

    def __init__(self, source: FreeAlgebra, target, images, check: bool = True):
        if isinstance(target, Ring):
            target = ring_as_algebra(target)
        if source.ring != target.ring:
            raise HomomorphismError("source and target must share the base ring")
        self.source = source
        self.target = target
        R = source.ring
        if isinstance(images, np.ndarray):
            self.images = arrays.normalize(R, images.copy())
        else:
            rows = []
            for im in images:
                if isinstance(im, AlgElem):
                    rows.append(list(im.coords))
                elif isinstance(im, (RingElem, int)):
                    rows.append([im])
                else:
                    rows.append(list(im))
            self.images = arrays.from_elems(R, rows)
        if self.images.shape != (source.rank, target.rank):
            raise DimensionError("image array has the wrong shape")
        if check:
            self._check()

    def _check(self):
        S, T, R = self.source, self.target, self.source.ring
        img = self.images
        u = arrays.normalize(R, S.unit @ img)
        if not arrays.arrays_equal(R, u, T.unit):
            raise HomomorphismError("unit is not sent to the unit")
        n = S.rank
        # f(θ_i θ_j) = Σ_k c[i,j,k] f(θ_k)
        lhs = arrays.normalize(R, np.tensordot(S.struct, img, axes=([2], [0])))  # [i, j, :]
        fi = np.repeat(img[:, None, :], n, axis=1)
        fj = np.repeat(img[None, :, :], n, axis=0)
        rhs = T.mul_arrays(fi, fj)
        if not arrays.arrays_equal(R, lhs, rhs):
            bad = next((i, j) for i in range(n) for j in range(n)
                       if not arrays.arrays_equal(R, lhs[i, j], rhs[i, j]))
            raise HomomorphismError(f"map is not multiplicative on basis pair {bad}")

    def __call__(self, a: AlgElem) -> AlgElem:
        return AlgElem(self.target, arrays.normalize(self.source.ring, a.coords @ self.images))

    def image_of_basis(self, i: int) -> AlgElem:
        return AlgElem(self.target, self.images[i].copy())

    def __eq__(self, other):
        return (isinstance(other, AlgHom) and self.source == other.source and self.target == other.target
                and arrays.arrays_equal(self.source.ring, self.images, other.images))

    def __hash__(self):
        return hash((self.source.rank, self.target.rank))

    def __repr__(self):
        ims = ", ".join(str(self.image_of_basis(i)) for i in range(self.source.rank))
        return f"AlgHom([{ims}])"


def generic_char_poly(A: FreeAlgebra, basis_images=None) -> tuple:
    """Char poly of ``Σ t_i θ_i`` (or of ``Σ t_i b_i``) over ``R[t_1..t_n]``.

    Returns ``(P, coefficients)`` with the coefficients ``[1, c_1, ..., c_n]``
    of ``det(λI - M)`` (highest first).
    """
    R = A.ring
    n = A.rank if basis_images is None else len(basis_images)
    names = tuple(f"t{i + 1}" for i in range(n))
    while set(names) & set(R.generators()):
        names = tuple("_" + s for s in names)
    P = PolyExt(R, names)
    elems = [A.basis(i) for i in range(n)] if basis_images is None else basis_images
    M = None
    for i, b in enumerate(elems):
        Mi = b.algebra.mult_matrix(b)
        term = [[P(x) * P.var(i) for x in row] for row in Mi.rows]
        M = term if M is None else [[a + c for a, c in zip(r, s)] for r, s in zip(M, term)]
    return P, charpoly_coeffs(M, P)


def is_universally_norm_preserving(f: AlgHom) -> bool:
    """Whether ``f`` preserves characteristic polynomials of generic elements."""
    if f.source.rank != f.target.rank:
        raise DimensionError("universally norm-preserving maps need equal ranks")
    _, src = generic_char_poly(f.source)
    imgs = [f.image_of_basis(i) for i in range(f.source.rank)]
    _, tgt = generic_char_poly(f.source, imgs)
    return all(a.v == b.v for a, b in zip(src, tgt))


def find_algebra_homs(A: FreeAlgebra, target) -> list:
    """Every R-algebra homomorphism ``A → target`` (algebra or base ring)."""
    if isinstance(target, Ring):
        target = ring_as_algebra(target)
    R = A.ring
    if R.enumerable:
        return _homs_by_enumeration(A, target)
    if target.rank == 1:
        return _homs_by_roots(A, target)
    raise CapabilityError(f"cannot enumerate homomorphisms over {R}")


def _unit_basis_index(A: FreeAlgebra):
    nz = [i for i, x in enumerate(arrays.to_elems(A.ring, A.unit)) if not x.is_zero()]
    if len(nz) == 1 and arrays.lift(A.ring, A.unit[nz[0]]) == 1:
        return nz[0]
    return None


def _homs_by_enumeration(A: FreeAlgebra, T: FreeAlgebra) -> list:
    R = A.ring
    n, m = A.rank, T.rank
    u = _unit_basis_index(A)
    free_rows = [i for i in range(n) if i != u]
    k = len(free_rows) * m
    card = R.cardinality()
    if card ** k > HOM_SEARCH_LIMIT:
        raise GuardError(f"hom search space {card}^{k} exceeds {HOM_SEARCH_LIMIT}", limit=HOM_SEARCH_LIMIT)
    found = []
    mod = arrays.small_modulus(R)
    if mod is not None:
        chunk = 200000
        total = card ** k
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            digits = np.empty((idx.size, k), dtype=np.int64)
            rest = idx.copy()
            for d in range(k - 1, -1, -1):
                digits[:, d] = rest % card
                rest //= card
            imgs = np.zeros((idx.size, n, m), dtype=np.int64)
            for pos, i in enumerate(free_rows):
                imgs[:, i, :] = digits[:, pos * m:(pos + 1) * m]
            if u is not None:
                imgs[:, u, :] = T.unit
            ok = _hom_mask(A, T, imgs, mod)
            for c in np.flatnonzero(ok):
                found.append(AlgHom(A, T, imgs[c]))
        return found
    elems = [arrays.lower(R, x) for x in R.elements()]
    for combo in itertools.product(elems, repeat=k):
        img = arrays.zeros(R, (n, m))
        for pos, i in enumerate(free_rows):
            for j in range(m):
                img[i, j] = combo[pos * m + j]
        if u is not None:
            img[u] = T.unit
        try:
            found.append(AlgHom(A, T, img))
        except HomomorphismError:
            pass
    return found


def _hom_mask(A, T, imgs, mod):
    """Vectorized hom-law test for a batch of image arrays (int64 residues)."""
    n, m = A.rank, T.rank
    ok = np.all((np.einsum("i,bij->bj", A.unit, imgs) % mod) == T.unit[None, :] % mod, axis=1)
    S, C = A.struct, T.struct
    for i in range(n):
        for j in range(i, n):
            lhs = np.einsum("k,bkm->bm", S[i, j], imgs) % mod
            fi, fj = imgs[:, i, :], imgs[:, j, :]
            # product in T: Σ_{a,b} fi_a fj_b C[a,b,:]
            t = (fi @ C.reshape(m, m * m)) % mod
            rhs = np.einsum("bk,bkl->bl", fj, t.reshape(-1, m, m)) % mod
            ok &= np.all(lhs == rhs, axis=1)
            if not ok.any():
                return ok
    return ok


def find_generator(A: FreeAlgebra, search: int = 2):
    """An element ``g`` with ``1, g, ..., g^{n-1}`` a basis, or ``None``.

    Tries basis elements first, then small integer combinations.
    """
    R = A.ring
    n = A.rank
    candidates = [A.basis(i) for i in range(n)]
    rng = range(-search, search + 1)
    for combo in itertools.product(rng, repeat=n):
        if sum(1 for c in combo if c) >= 2:
            candidates.append(A.element([R(c) for c in combo]))
    for g in candidates:
        P = power_matrix(g)
        d = determinant(P)
        if d.is_unit():
            return g
    return None


def power_matrix(g: AlgElem) -> Matrix:
    """Matrix whose column ``j`` is the coordinate vector of ``g^j``."""
    A = g.algebra
    cols = []
    p = A.one
    for _ in range(A.rank):
        cols.append(p.elems())
        p = p * g
    return Matrix(A.ring, [list(r) for r in zip(*cols)])


def _homs_by_roots(A: FreeAlgebra, T: FreeAlgebra) -> list:
    from .matrices import adjugate
    from .roots import find_monic_roots

    R = A.ring
    n = A.rank
    if A.poly is not None:
        g = A.gen()
    else:
        g = find_generator(A)
        if g is None:
            raise CapabilityError("no power basis found; cannot reduce hom search to root finding")
    chi = A.char_poly(g)
    P = power_matrix(g)
    dinv = determinant(P).inverse()
    Pinv = [[x * dinv for x in row] for row in adjugate(P)]
    out = []
    for r in find_monic_roots(chi.coeffs(), R):
        pw = [R.one]
        for _ in range(n - 1):
            pw.append(pw[-1] * r)
        # θ_i = Σ_j Pinv[j][i] g^j  (coordinates of θ_i in the power basis)
        images = []
        for i in range(n):
            s = R.zero
            for j in range(n):
                s = s + Pinv[j][i] * pw[j]
            images.append([s])
        try:
            out.append(AlgHom(A, T, images))
        except HomomorphismError:
            pass
    return out


def disc_of_basis(A: FreeAlgebra) -> RingElem:
    """Determinant of the trace form on the chosen basis."""
    return determinant(A.gram_matrix())


def mult_matrix(a: AlgElem) -> Matrix:
    return a.algebra.mult_matrix(a)


def char_poly(a: AlgElem) -> MonicPoly:
    return a.algebra.char_poly(a)


def trace(a: AlgElem) -> RingElem:
    return a.algebra.trace(a)


def norm(a: AlgElem) -> RingElem:
    return a.algebra.norm(a)
