"""Dense numpy arrays over the base rings.

Vectors, matrices and tensors are stored as numpy arrays whose entries are
"array scalars":

* ``Z/m`` and ``GF(p)`` with ``m < 2**20``: ``int64`` residues,
* ``Z``: Python ``int`` in an object array,
* ``Q``: ``Fraction`` in an object array,
* everything else: :class:`RingElem` in an object array.

All four support ``+``, ``-`` and ``*`` through numpy, so contractions such as
``tensordot`` work uniformly; callers pass results through :func:`normalize`
to reduce modular residues and to fix up empty object sums.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .rings import Integers, IntegersMod, Rationals, Ring, RingElem

# int64 products of two residues summed over up to 2**20 terms stay exact.
SMALL_MODULUS = 1 << 20


def small_modulus(ring: Ring) -> int | None:
    """``m`` when ``ring`` is ``Z/m`` or ``GF(m)`` with int64-safe residues."""
    if isinstance(ring, IntegersMod) and ring.m < SMALL_MODULUS:
        return ring.m
    return None


def is_native(ring: Ring) -> bool:
    return small_modulus(ring) is not None


def lower(ring: Ring, x):
    """RingElem (or int) to array scalar."""
    if not isinstance(x, RingElem):
        x = ring(x)
    elif x.ring != ring:
        x = ring(x)
    if isinstance(ring, (Integers, IntegersMod, Rationals)):
        return x.v
    return x


def lift(ring: Ring, s) -> RingElem:
    """Array scalar to RingElem."""
    if isinstance(s, RingElem):
        return s if s.ring == ring else ring(s)
    if isinstance(s, (np.integer,)):
        s = int(s)
    return ring(s)


def zeros(ring: Ring, shape) -> np.ndarray:
    if is_native(ring):
        return np.zeros(shape, dtype=np.int64)
    out = np.empty(shape, dtype=object)
    out.fill(lower(ring, 0))
    return out


def from_elems(ring: Ring, data) -> np.ndarray:
    """Array from a (nested) list of RingElem / int values."""
    arr = np.array(data, dtype=object)
    flat = arr.reshape(-1)
    out = zeros(ring, arr.shape)
    oflat = out.reshape(-1)
    for i, x in enumerate(flat):
        oflat[i] = lower(ring, x)
    return out


def to_elems(ring: Ring, arr) -> list:
    """Nested lists of RingElem with the array's shape."""
    arr = np.asarray(arr)
    if arr.ndim == 0:
        return lift(ring, arr.item())
    return [to_elems(ring, a) for a in arr]


def normalize(ring: Ring, arr) -> np.ndarray:
    """Reduce residues; coerce stray ints produced by object sums."""
    m = small_modulus(ring)
    if m is not None:
        return np.mod(np.asarray(arr, dtype=np.int64), m)
    arr = np.asarray(arr, dtype=object)
    if isinstance(ring, Integers):
        return arr
    if isinstance(ring, Rationals):
        flat = arr.reshape(-1)
        for i, x in enumerate(flat):
            if not isinstance(x, Fraction):
                flat[i] = Fraction(x)
        return arr
    flat = arr.reshape(-1)
    for i, x in enumerate(flat):
        if not isinstance(x, RingElem) or x.ring != ring:
            flat[i] = ring(x)
    return arr


def is_zero_array(ring: Ring, arr) -> bool:
    arr = np.asarray(arr)
    if arr.dtype != object:
        return not arr.any()
    return all(x == 0 for x in arr.reshape(-1))


def arrays_equal(ring: Ring, a, b) -> bool:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return False
    if a.dtype != object and b.dtype != object:
        return bool(np.array_equal(a, b))
    return all(x == y for x, y in zip(a.reshape(-1), b.reshape(-1)))


def scalar_mul(ring: Ring, c, arr) -> np.ndarray:
    """Multiply an array by a scalar (RingElem or int)."""
    c = lower(ring, c)
    return normalize(ring, c * np.asarray(arr))


def matmul(ring: Ring, a, b) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    m = small_modulus(ring)
    if m is not None and m * m * max(a.shape[-1], 1) >= (1 << 62):
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(a.shape[1]):
            out = (out + np.outer(a[:, k], b[k, :]) % m) % m
        return out
    if a.shape[-1] == 0:
        return zeros(ring, a.shape[:-1] + b.shape[1:])
    return normalize(ring, a @ b)
