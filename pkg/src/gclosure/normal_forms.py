"""Normal forms for row spans over fields, ``Z`` and ``Z/m``.

* Fields: reduced row echelon form.  ``GF(p)`` runs blockwise on int64
  arrays; ``Q`` and finite extension fields use exact Python elements.
* ``Z``: Hermite form, then Smith form with unimodular transforms.
* ``Z/m``: Howell form, which makes row-span membership decidable over a
  non-field, then a Smith form over ``Z/m``.

:class:`QuotientModule` packages the answer to the question every caller
asks: what does ``R^N / rowspan(M)`` look like, and what are the canonical
coordinates of a vector in it?
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import arrays
from .errors import CapabilityError, ConsistencyError, DimensionError
from .rings import Integers, IntegersMod, Ring


def xgcd(a: int, b: int):
    """``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def unit_normalizer(a: int, m: int) -> int:
    """A unit ``u`` of ``Z/m`` with ``a*u ≡ gcd(a, m) (mod m)``."""
    g = math.gcd(a, m)
    if g == m:
        return 1
    mg = m // g
    u0 = pow((a // g) % mg, -1, mg) if mg > 1 else 0
    for k in range(g + 1):
        u = u0 + k * mg
        if math.gcd(u, m) == 1:
            return u % m
    raise ConsistencyError("no unit normalizer found")


# --- fields ---------------------------------------------------------------------

def mulmod(X, Y, p: int) -> np.ndarray:
    """``X @ Y mod p`` for int64 arrays, through float64 BLAS when that is exact."""
    inner = X.shape[-1]
    if (p - 1) * (p - 1) * max(inner, 1) < (1 << 52):
        Z = np.asarray(X, dtype=np.float64) @ np.asarray(Y, dtype=np.float64)
        return np.fmod(Z, p).astype(np.int64)
    return (np.asarray(X, dtype=np.int64) @ np.asarray(Y, dtype=np.int64)) % p


def _rref_block_mod_p(B, p):
    """In-place style RREF of a small int64 block; returns (rows, pivots)."""
    B = B[np.any(B, axis=1)]
    pivots = []
    pos = 0
    nrows, ncols = B.shape
    for col in range(ncols):
        if pos == nrows:
            break
        nz = np.flatnonzero(B[pos:, col])
        if nz.size == 0:
            continue
        i = pos + nz[0]
        if i != pos:
            B[[pos, i]] = B[[i, pos]]
        inv = pow(int(B[pos, col]), -1, p)
        B[pos] = (B[pos] * inv) % p
        colv = B[:, col].copy()
        colv[pos] = 0
        hit = np.flatnonzero(colv)
        if hit.size:
            B[hit] = (B[hit] - np.outer(colv[hit], B[pos])) % p
        pivots.append(col)
        pos += 1
    return B[:pos], pivots


def rref_mod_p(A, p: int, block: int = 512):
    """RREF rows and pivot columns of ``A`` over GF(p), processed in row blocks."""
    A = np.asarray(A, dtype=np.int64) % p
    ncols = A.shape[1]
    basis = np.zeros((0, ncols), dtype=np.int64)
    pivots: list[int] = []
    for start in range(0, A.shape[0], block):
        B = A[start:start + block]
        if pivots:
            B = (B - mulmod(B[:, pivots], basis, p)) % p
        if not B.any():
            continue
        Bred, newp = _rref_block_mod_p(B.copy(), p)
        if not newp:
            continue
        if pivots:
            basis = (basis - mulmod(basis[:, newp], Bred, p)) % p
        basis = np.vstack([basis, Bred])
        pivots = pivots + newp
        order = np.argsort(pivots, kind="stable")
        basis = basis[order]
        pivots = [pivots[i] for i in order]
        if len(pivots) == ncols:
            break
    return basis, pivots


def rref_generic(rows, ring: Ring):
    """RREF over an exact field with RingElem entries."""
    M = [list(r) for r in rows]
    pivots = []
    pos = 0
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        i = next((k for k in range(pos, nrows) if not M[k][col].is_zero()), None)
        if i is None:
            continue
        M[pos], M[i] = M[i], M[pos]
        inv = M[pos][col].inverse()
        M[pos] = [x * inv for x in M[pos]]
        for k in range(nrows):
            if k != pos and not M[k][col].is_zero():
                c = M[k][col]
                M[k] = [x - c * y for x, y in zip(M[k], M[pos])]
        pivots.append(col)
        pos += 1
        if pos == nrows:
            break
    return M[:pos], pivots


# --- Z/m --------------------------------------------------------------------------

def howell_mod_m(A, m: int):
    """Howell form of the row span of ``A`` over ``Z/m``.

    Returns ``(H, pivots)``: each row of ``H`` has its leading entry, a
    divisor of ``m``, in column ``pivots[k]``; entries above a pivot are
    reduced modulo it.  Annihilator rows ``(m/g)·row`` are fed back at each
    step, which is what gives the Howell property.
    """
    work = np.asarray(A, dtype=np.int64) % m
    work = work[np.any(work, axis=1)]
    ncols = work.shape[1] if work.ndim == 2 else 0
    done = []
    pivots = []
    for col in range(ncols):
        if work.shape[0] == 0:
            break
        colv = work[:, col]
        nz = np.flatnonzero(colv)
        if nz.size == 0:
            continue
        gs = np.gcd(colv[nz], m)
        i = int(nz[np.argmin(gs)])
        while True:
            a = int(work[i, col])
            g = math.gcd(a, m)
            bad = np.flatnonzero(work[:, col] % g)
            if bad.size == 0:
                break
            j = int(bad[0])
            b = int(work[j, col])
            d, s, t = xgcd(a, b)
            ri, rj = work[i].copy(), work[j].copy()
            work[i] = (s * ri + t * rj) % m
            work[j] = ((-(b // d)) * ri + (a // d) * rj) % m
        u = unit_normalizer(int(work[i, col]), m)
        piv = (work[i] * u) % m
        g = int(piv[col])
        keep = np.ones(work.shape[0], dtype=bool)
        keep[i] = False
        rest = work[keep]
        q = rest[:, col] // g
        hit = np.flatnonzero(q)
        # only rows with something in the pivot column change
        rest[hit] = (rest[hit] - np.outer(q[hit], piv) % m) % m
        ann = (piv * (m // g)) % m
        if ann.any():
            rest = np.vstack([rest, ann[None, :]])
        work = rest[np.any(rest, axis=1)]
        done.append(piv)
        pivots.append(col)
    H = np.array(done, dtype=np.int64).reshape(len(done), ncols)
    for k, c in enumerate(pivots):
        g = int(H[k, c])
        for i in range(k):
            q = int(H[i, c]) // g
            if q:
                H[i] = (H[i] - q * H[k]) % m
    return H, pivots


def howell_reduce(v, H, pivots, m: int):
    """Reduce ``v`` against a Howell form; zero result iff ``v`` is in the span."""
    v = np.asarray(v, dtype=np.int64) % m
    for k, c in enumerate(pivots):
        g = int(H[k, c])
        q = v[..., c] // g
        v = (v - np.multiply.outer(q, H[k]) % m) % m
    return v


# --- Z ----------------------------------------------------------------------------

def hermite_int(rows):
    """Row Hermite normal form over ``Z`` (positive pivots, reduced above)."""
    M = [list(map(int, r)) for r in rows]
    M = [r for r in M if any(r)]
    ncols = len(M[0]) if M else 0
    out = []
    pivots = []
    for col in range(ncols):
        nz = [r for r in M if r[col]]
        if not nz:
            continue
        rest = [r for r in M if not r[col]]
        piv = min(nz, key=lambda r: abs(r[col]))
        others = [r for r in nz if r is not piv]
        for r in others:
            a, b = piv[col], r[col]
            if b % a == 0:
                q = b // a
                new = [x - q * y for x, y in zip(r, piv)]
            else:
                g, s, t = xgcd(a, b)
                p2 = [s * x + t * y for x, y in zip(piv, r)]
                new = [(-(b // g)) * x + (a // g) * y for x, y in zip(piv, r)]
                piv = p2
            if any(new):
                rest.append(new)
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        pivots.append(col)
        M = rest
    for k, c in enumerate(pivots):
        g = out[k][c]
        for i in range(k):
            q = out[i][c] // g
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], out[k])]
    return out, pivots


# --- Smith form (Z or Z/m) --------------------------------------------------------

def smith(S, modulus: int | None = None, track_rows: bool = False, ncols: int | None = None):
    """Smith form ``U·S·V = D`` over ``Z`` (``modulus=None``) or ``Z/m``.

    Returns ``(diag, U, V, Vinv)``; ``U`` is ``None`` unless ``track_rows``.
    Over ``Z/m`` every diagonal entry is a divisor of ``m`` (``0`` stands for
    ``m``) and each divides the next.
    """
    m = modulus
    if m is None:
        S = np.array([[int(x) for x in r] for r in S], dtype=object)
    else:
        S = np.array(S, dtype=np.int64) % m
    if S.ndim != 2:
        S = S.reshape(0, ncols or 0)
    r, n = S.shape
    dt = object if m is None else np.int64

    def red(x):
        return x if m is None else x % m

    def eye(k):
        e = np.zeros((k, k), dtype=dt)
        for i in range(k):
            e[i, i] = 1
        return e

    V, Vinv = eye(n), eye(n)
    U = eye(r) if track_rows else None

    def size(x):
        x = int(x)
        return abs(x) if m is None else math.gcd(x, m)

    def divides(a, b):
        a = int(a)
        b = int(b)
        if m is None:
            return b % a == 0
        return b % a == 0  # pivots are normalized to divisors of m

    def normalize_pivot(t):
        a = int(S[t, t])
        if m is None:
            if a < 0:
                S[t] = -S[t]
                if U is not None:
                    U[t] = -U[t]
        else:
            u = unit_normalizer(a, m)
            if u != 1:
                S[t] = red(S[t] * u)
                if U is not None:
                    U[t] = red(U[t] * u)

    def row_combine(i, j, a, b):
        """Rows (i, j) <- [[s, t], [-b/g, a/g]] (rows i, j); pivot at i becomes g."""
        g, s, t_ = xgcd(a, b)
        ri, rj = S[i].copy(), S[j].copy()
        S[i] = red(s * ri + t_ * rj)
        S[j] = red((-(b // g)) * ri + (a // g) * rj)
        if U is not None:
            ui, uj = U[i].copy(), U[j].copy()
            U[i] = red(s * ui + t_ * uj)
            U[j] = red((-(b // g)) * ui + (a // g) * uj)

    def col_combine(i, j, a, b):
        g, s, t_ = xgcd(a, b)
        x, y = -(b // g), a // g
        ci, cj = S[:, i].copy(), S[:, j].copy()
        S[:, i] = red(s * ci + t_ * cj)
        S[:, j] = red(x * ci + y * cj)
        vi, vj = V[:, i].copy(), V[:, j].copy()
        V[:, i] = red(s * vi + t_ * vj)
        V[:, j] = red(x * vi + y * vj)
        # E = [[s, x], [t, y]] acting on columns (i, j); det E = 1,
        # E^{-1} = [[y, -x], [-t, s]] acting on rows of Vinv.
        wi, wj = Vinv[i].copy(), Vinv[j].copy()
        Vinv[i] = red(y * wi - x * wj)
        Vinv[j] = red(-t_ * wi + s * wj)

    t = 0
    while t < min(r, n):
        sub = S[t:, t:]
        nz = np.argwhere(sub != 0)
        if nz.size == 0:
            break
        best = min(nz, key=lambda ij: size(sub[ij[0], ij[1]]))
        i, j = t + int(best[0]), t + int(best[1])
        if i != t:
            S[[t, i]] = S[[i, t]]
            if U is not None:
                U[[t, i]] = U[[i, t]]
        if j != t:
            S[:, [t, j]] = S[:, [j, t]]
            V[:, [t, j]] = V[:, [j, t]]
            Vinv[[t, j]] = Vinv[[j, t]]
        while True:
            normalize_pivot(t)
            a = S[t, t]
            for i in range(t + 1, r):
                b = S[i, t]
                if b == 0:
                    continue
                if divides(a, b):
                    q = int(b) // int(a)
                    S[i] = red(S[i] - q * S[t])
                    if U is not None:
                        U[i] = red(U[i] - q * U[t])
                else:
                    row_combine(t, i, int(a), int(b))
                    normalize_pivot(t)
                    a = S[t, t]
            for j in range(t + 1, n):
                b = S[t, j]
                if b == 0:
                    continue
                if divides(a, b):
                    q = int(b) // int(a)
                    S[:, j] = red(S[:, j] - q * S[:, t])
                    V[:, j] = red(V[:, j] - q * V[:, t])
                    Vinv[t] = red(Vinv[t] + q * Vinv[j])
                else:
                    col_combine(t, j, int(a), int(b))
                    if m is not None:
                        normalize_pivot(t)
                    elif S[t, t] < 0:
                        normalize_pivot(t)
                    a = S[t, t]
            if np.any(S[t + 1:, t] != 0) or np.any(S[t, t + 1:] != 0):
                continue
            # divisibility of the remaining block by the pivot
            a = int(S[t, t])
            block = S[t + 1:, t + 1:]
            bad = np.argwhere((block % a != 0).astype(bool)) if block.size else []
            if len(bad):
                k = t + 1 + int(bad[0][0])
                S[t] = red(S[t] + S[k])
                if U is not None:
                    U[t] = red(U[t] + U[k])
                continue
            break
        t += 1
    diag = [int(S[k, k]) for k in range(min(r, n))]
    if m is not None:
        diag = [math.gcd(d, m) % m for d in diag]
    return diag, U, V, Vinv


# --- public API ------------------------------------------------------------------

@dataclass
class NormalForm:
    """A normal form of a matrix's row span.

    ``kind`` is ``"rref"``, ``"hermite"``, ``"smith"`` or ``"howell"``;
    ``rows`` is the normal form itself (nonzero rows only for echelon kinds).
    When ``transform`` is present, ``transform @ original == rows`` (checked at
    construction); Smith forms carry ``V`` with ``U @ original @ V == D``.
    """

    kind: str
    ring: Ring
    rows: np.ndarray
    pivots: list
    transform: np.ndarray | None = None
    invariant_factors: list | None = None
    V: np.ndarray | None = None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _as_array(M, ring):
    if isinstance(M, np.ndarray):
        return arrays.normalize(ring, M.copy())
    from .matrices import Matrix

    if isinstance(M, Matrix):
        M = M.rows
    return arrays.from_elems(ring, M)


def _check_capable(ring):
    if not ring.linear_algebra_capable:
        raise CapabilityError(f"normal forms are not available over {ring}")


def normal_form(M, ring: Ring | None = None, kind: str | None = None, with_transform: bool | None = None) -> NormalForm:
    """Normal form of ``M`` (Matrix, nested list or array) over its ring."""
    from .matrices import Matrix

    if ring is None:
        if isinstance(M, Matrix):
            ring = M.ring
        else:
            ring = M[0][0].ring
    _check_capable(ring)
    A = _as_array(M, ring)
    if A.ndim != 2:
        raise DimensionError("normal_form expects a 2-d matrix")
    nrows, ncols = A.shape
    if with_transform is None:
        with_transform = nrows <= 200
    aug = A
    if with_transform:
        eye = arrays.zeros(ring, (nrows, nrows))
        for i in range(nrows):
            eye[i, i] = arrays.lower(ring, 1)
        aug = np.hstack([A, eye]) if ring.is_field or isinstance(ring, IntegersMod) else A
    m = arrays.small_modulus(ring)
    if ring.is_field and kind in (None, "rref"):
        if m is not None:
            R, piv = rref_mod_p(aug, m)
        else:
            rows_e, piv = rref_generic(arrays.to_elems(ring, aug), ring)
            R = arrays.from_elems(ring, rows_e) if rows_e else arrays.zeros(ring, (0, aug.shape[1]))
        piv = [c for c in piv if c < ncols]
        nf = _split_transform(ring, "rref", R, piv, ncols, with_transform, A)
        return nf
    if isinstance(ring, IntegersMod) and kind in (None, "howell"):
        if m is None:
            raise CapabilityError(f"modulus of {ring} is too large for the int64 kernels")
        if with_transform:
            # Elimination decisions only look at the leading columns, so the
            # augmented run produces the same Howell rows plus their transform.
            H, piv = howell_mod_m(aug, m)
            keep = [k for k, c in enumerate(piv) if c < ncols]
            T, Hm = H[keep][:, ncols:], H[keep][:, :ncols]
            if not np.array_equal(arrays.matmul(ring, T, A), Hm):
                raise ConsistencyError("Howell transform check failed")
            return NormalForm("howell", ring, Hm, [piv[k] for k in keep], transform=T)
        H, piv = howell_mod_m(A, m)
        return NormalForm("howell", ring, H, piv)
    if isinstance(ring, Integers) and kind in (None, "hermite"):
        H, piv = hermite_int(A.tolist())
        Ha = np.array(H, dtype=object).reshape(len(H), ncols)
        return NormalForm("hermite", ring, Ha, piv)
    if kind == "smith" and isinstance(ring, (Integers, IntegersMod)):
        diag, U, V, _ = smith(A.tolist() if m is None else A, m, track_rows=True)
        D = arrays.zeros(ring, A.shape)
        for k, d in enumerate(diag):
            D[k, k] = d
        if m is None:
            check = (U.dot(np.array(A, dtype=object))).dot(V)
            ok = all(int(x) == int(y) for x, y in zip(check.reshape(-1), D.reshape(-1)))
        else:
            check = arrays.matmul(ring, arrays.matmul(ring, U, A), V)
            # over Z/m the diagonal is reported up to units
            ok = all(math.gcd(int(check[k, k]), m) % m == D[k, k] for k in range(len(diag)))
            off = check.copy()
            for k in range(len(diag)):
                off[k, k] = 0
            ok = ok and not off.any()
        if not ok:
            raise ConsistencyError("Smith transform check failed")
        return NormalForm("smith", ring, D, list(range(sum(1 for d in diag if d))), transform=U,
                          invariant_factors=[d for d in diag if d != 0] if m is None else diag, V=V)
    raise CapabilityError(f"normal form kind {kind!r} is not available over {ring}")


def _split_transform(ring, kind, R, piv, ncols, with_transform, A):
    R = R[: len(piv)]
    if not with_transform:
        return NormalForm(kind, ring, R[:, :ncols] if R.shape[1] > ncols else R, piv)
    Rm, T = R[:, :ncols], R[:, ncols:]
    if not arrays.arrays_equal(ring, arrays.matmul(ring, T, A), Rm):
        raise ConsistencyError(f"{kind} transform check failed")
    return NormalForm(kind, ring, Rm, piv, transform=T)


def row_span_contains(nf: NormalForm, v) -> bool:
    """Membership of ``v`` in the row span represented by ``nf``."""
    return bool(QuotientModule.from_normal_form(nf).contains(v))


def smith_invariants(M, ring: Ring | None = None) -> list:
    """Nonzero Smith invariant factors of ``M`` over ``Z`` or ``Z/m``."""
    nf = normal_form(M, ring, kind="smith", with_transform=True)
    return [d for d in nf.invariant_factors if d != 0]


class QuotientModule:
    """``R^N / rowspan(M)`` as ``⊕ R/(d_i)`` with canonical coordinates.

    ``orders[i]`` is the generator of the annihilator of the ``i``-th summand
    (``0`` for a free summand).  ``reduce`` sends ambient vectors to canonical
    coordinates (each reduced modulo its order); ``lift`` maps coordinates back
    to ambient representatives.
    """

    def __init__(self, ring: Ring, dim: int, orders, reduce_fn, lift_rows, contains_fn=None):
        self.ring = ring
        self.dim = dim
        self.orders = list(orders)
        self._reduce = reduce_fn
        self.lift_rows = lift_rows
        self._contains = contains_fn

    @classmethod
    def from_relations(cls, ring: Ring, relations, dim: int | None = None) -> "QuotientModule":
        """Present the quotient of ``R^dim`` by the span of ``relations`` rows."""
        _check_capable(ring)
        if isinstance(relations, np.ndarray):
            A = arrays.normalize(ring, relations.copy())
        else:
            A = arrays.from_elems(ring, relations) if len(relations) else None
        if A is None or A.size == 0:
            if dim is None:
                raise DimensionError("cannot infer the dimension of an empty relation set")
            A = arrays.zeros(ring, (0, dim))
        dim = A.shape[1]
        m = arrays.small_modulus(ring)
        if ring.is_field:
            if m is not None:
                R, piv = rref_mod_p(A, m)
            else:
                rows_e, piv = rref_generic(arrays.to_elems(ring, A), ring) if A.shape[0] else ([], [])
                R = arrays.from_elems(ring, rows_e) if rows_e else arrays.zeros(ring, (0, dim))
            return cls._from_rref(ring, R, piv, dim)
        if isinstance(ring, IntegersMod):
            if m is None:
                raise CapabilityError(f"modulus of {ring} is too large for the int64 kernels")
            H, piv = howell_mod_m(A, m)
            return cls._from_smith(ring, H, dim, m)
        H, piv = hermite_int(A.tolist())
        return cls._from_smith(ring, H, dim, None)

    @classmethod
    def from_normal_form(cls, nf: NormalForm) -> "QuotientModule":
        dim = nf.rows.shape[1]
        if nf.kind == "rref":
            return cls._from_rref(nf.ring, nf.rows, nf.pivots, dim)
        return cls.from_relations(nf.ring, nf.rows, dim)

    @classmethod
    def _from_rref(cls, ring, R, piv, dim):
        free = [c for c in range(dim) if c not in set(piv)]
        R = R[: len(piv)]
        Rp = R
        lift_rows = arrays.zeros(ring, (len(free), dim))
        for k, c in enumerate(free):
            lift_rows[k, c] = arrays.lower(ring, 1)

        def reduce_fn(X):
            X = np.asarray(X)
            if piv:
                X = arrays.normalize(ring, X - _matmul_last(ring, X[..., piv], Rp))
            return X[..., free]

        q = cls(ring, dim, [0] * len(free), reduce_fn, lift_rows)
        q.pivots = list(piv)
        q.echelon = R
        return q

    @classmethod
    def _from_smith(cls, ring, H, dim, m):
        if len(H) == 0:
            H = np.zeros((0, dim), dtype=np.int64 if m else object)
        diag, _, V, Vinv = smith(H if m else [list(r) for r in H], m, ncols=dim)
        full = list(diag) + [0] * (dim - len(diag))
        keep = [i for i, d in enumerate(full) if d != 1]
        orders = [full[i] for i in keep]
        if m is not None:
            orders = [0 if d in (0, m) else d for d in orders]
        Vk = V[:, keep]
        lift_rows = Vinv[keep]
        if m is not None:
            Vk = np.asarray(Vk, dtype=np.int64)
            lift_rows = np.asarray(lift_rows, dtype=np.int64)
        mods = np.array([d if d else (m or 0) for d in orders], dtype=np.int64 if m else object)

        def reduce_fn(X):
            X = np.asarray(X)
            Z = _matmul_last(ring, X, Vk)
            if m is not None:
                return np.mod(Z, np.where(mods == 0, m, mods)) if len(orders) else Z
            Z = np.asarray(Z, dtype=object)
            for k, d in enumerate(orders):
                if d:
                    Z[..., k] = Z[..., k] % d
            return Z

        q = cls(ring, dim, orders, reduce_fn, lift_rows)
        q.echelon = np.asarray(H, dtype=np.int64 if m else object).reshape(-1, dim)
        return q

    # -- queries ----------------------------------------------------------------
    @property
    def rank(self) -> int:
        """Number of cyclic summands (free and torsion)."""
        return len(self.orders)

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.orders if d == 0)

    @property
    def invariant_factors(self) -> list:
        return sorted(d for d in self.orders if d)

    def size(self) -> int:
        if not self.ring.enumerable:
            raise CapabilityError(f"{self.ring} is not enumerable")
        total = 1
        card = self.ring.cardinality()
        for d in self.orders:
            total *= d if d else card
        return total

    def reduce(self, X) -> np.ndarray:
        """Canonical coordinates of ambient vector(s) ``X`` (last axis = dim)."""
        return self._reduce(arrays.normalize(self.ring, np.asarray(X)))

    def lift(self, Z) -> np.ndarray:
        Z = arrays.normalize(self.ring, np.asarray(Z))
        if self.rank == 0:
            return arrays.zeros(self.ring, Z.shape[:-1] + (self.dim,))
        return _matmul_last(self.ring, Z, self.lift_rows)

    def contains(self, X):
        """True where ``X`` lies in the relation span."""
        Z = self.reduce(X)
        if Z.dtype != object:
            return ~np.any(Z, axis=-1)
        flat = Z.reshape(-1, Z.shape[-1]) if Z.ndim > 1 else Z.reshape(1, -1)
        res = np.array([all(x == 0 for x in row) for row in flat], dtype=bool)
        return res.reshape(Z.shape[:-1]) if Z.ndim > 1 else bool(res[0])


def _matmul_last(ring, X, M):
    """``X @ M`` over the ring, contracting the last axis of ``X``."""
    X = np.asarray(X)
    M = np.asarray(M)
    if X.shape[-1] == 0:
        return arrays.zeros(ring, X.shape[:-1] + M.shape[1:])
    m = arrays.small_modulus(ring)
    if m is not None:
        X = np.asarray(X, dtype=np.int64)
        M = np.asarray(M, dtype=np.int64)
        if m * m * X.shape[-1] < (1 << 62):
            return mulmod(X, M, m)
        out = np.zeros(X.shape[:-1] + M.shape[1:], dtype=np.int64)
        for k in range(X.shape[-1]):
            out = (out + np.multiply.outer(X[..., k], M[k]) % m) % m
        return out
    return arrays.normalize(ring, np.asarray(X, dtype=object) @ np.asarray(M, dtype=object))


def right_kernel(M, ring: Ring | None = None) -> np.ndarray:
    """Rows generating ``{v : M v = 0}`` over a field, ``Z`` or ``Z/m``."""
    from .matrices import Matrix

    if ring is None:
        ring = M.ring if isinstance(M, Matrix) else M[0][0].ring
    _check_capable(ring)
    A = _as_array(M, ring)
    nrows, ncols = A.shape
    if ring.is_field:
        m = arrays.small_modulus(ring)
        if m is not None:
            R, piv = rref_mod_p(A, m)
        else:
            rows_e, piv = rref_generic(arrays.to_elems(ring, A), ring)
            R = arrays.from_elems(ring, rows_e) if rows_e else arrays.zeros(ring, (0, ncols))
        free = [c for c in range(ncols) if c not in set(piv)]
        out = arrays.zeros(ring, (len(free), ncols))
        one = arrays.lower(ring, 1)
        for k, f in enumerate(free):
            out[k, f] = one
            for r, c in enumerate(piv):
                out[k, c] = -R[r, f]
        return arrays.normalize(ring, out)
    m = arrays.small_modulus(ring)
    if isinstance(ring, IntegersMod) and m is None:
        raise CapabilityError(f"modulus of {ring} is too large for the int64 kernels")
    diag, _, V, _ = smith(A if m else A.tolist(), m, ncols=ncols)
    full = list(diag) + [0] * (ncols - len(diag))
    gens = []
    for i, d in enumerate(full):
        col = V[:, i]
        if m is None:
            if d == 0:
                gens.append([int(x) for x in col])
        else:
            g = math.gcd(d, m)
            mult = m // g if g else 1
            v = (np.asarray(col, dtype=np.int64) * mult) % m
            if v.any():
                gens.append(v)
    if m is None:
        return np.array(gens, dtype=object).reshape(len(gens), ncols)
    return np.array(gens, dtype=np.int64).reshape(len(gens), ncols)
