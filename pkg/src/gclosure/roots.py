"""Roots of monic polynomials and the primoid test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapabilityError
from .rings import Integers, QuotExt, Rationals, Ring, RingElem


def _coeff_list(f, R: Ring | None):
    """Low-to-high RingElem coefficients of a monic polynomial."""
    if hasattr(f, "coeffs"):
        cs = f.coeffs()
        R = R or f.ring
    else:
        cs = list(f)
    if R is None:
        R = cs[0].ring
    cs = [R(c) for c in cs]
    while len(cs) > 1 and cs[-1].is_zero():
        cs.pop()
    if cs[-1] != R.one:
        raise ValueError("polynomial is not monic")
    return cs, R


def evaluate_poly(coeffs, x):
    """Horner evaluation of low-to-high coefficients at ``x``."""
    acc = x.ring.zero if isinstance(x, RingElem) else 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _integer_roots(cs: list[int]) -> set[int]:
    roots = set()
    k = 0
    while k < len(cs) - 1 and cs[k] == 0:
        k += 1
    if k > 0:
        roots.add(0)
    tail = cs[k:]
    if len(tail) == 1:
        return roots
    for d in _divisors(tail[0]):
        for r in (d, -d):
            if evaluate_poly(tail, r) == 0:
                roots.add(r)
    return roots


def _quadratic_order_d(R: Ring):
    """``d`` when ``R`` is ``Z[u]/(u^2 - d)``, else ``None``."""
    if isinstance(R, QuotExt) and isinstance(R.base, Integers) and R.degree == 2 and R.modulus[1] == 0:
        return -R.modulus[0]
    return None


def find_monic_roots(f, R: Ring | None = None) -> set:
    """The complete set of roots of the monic polynomial ``f`` in ``R``.

    ``f`` is a low-to-high coefficient list or a :class:`MonicPoly`.
    Unsupported combinations raise :class:`CapabilityError` rather than
    returning a partial answer.
    """
    cs, R = _coeff_list(f, R)
    deg = len(cs) - 1
    if deg == 0:
        return set()
    if R.enumerable:
        return {x for x in R.elements() if evaluate_poly(cs, x).is_zero()}
    if deg == 1:
        return {-cs[0]}
    if isinstance(R, Integers):
        return {R(r) for r in _integer_roots([c.v for c in cs])}
    if isinstance(R, Rationals):
        D = 1
        for c in cs:
            D = D * c.v.denominator // math.gcd(D, c.v.denominator)
        scaled = [int(c.v * D ** (deg - k)) for k, c in enumerate(cs)]
        return {R(Fraction(r, D)) for r in _integer_roots(scaled)}
    d = _quadratic_order_d(R)
    if d is not None and deg == 2:
        if d <= 0:
            raise CapabilityError(f"root search in {R} needs u^2 = d with d > 0")
        return _quadratic_order_roots(R, d, cs)
    raise CapabilityError(f"cannot find roots of a degree-{deg} polynomial over {R}")


def _quadratic_order_roots(R, d, cs):
    # x^2 + B x + C with B = B0 + B1 u, C = C0 + C1 u; root a + b u.
    (C0, C1), (B0, B1) = cs[0].v, cs[1].v
    # Real part: a^2 + d b^2 = -(B0 a + d B1 b + C0).  With N = a^2 + d b^2,
    # |a| <= sqrt(N) and sqrt(d)|b| <= sqrt(N), so
    # N <= beta sqrt(N) + |C0| where beta = |B0| + sqrt(d)|B1|.
    sqrt_d_up = math.isqrt(d) + 1
    beta = abs(B0) + sqrt_d_up * abs(B1)
    bound = (beta + math.isqrt(beta * beta + 4 * abs(C0)) + 2) // 2 + 1
    roots = set()
    bmax = bound // max(math.isqrt(d), 1) + 1
    for b in range(-bmax, bmax + 1):
        # solve the real-part equation for a: a^2 + B0 a + (d b^2 + d B1 b + C0) = 0
        k = d * b * b + d * B1 * b + C0
        disc = B0 * B0 - 4 * k
        if disc < 0:
            continue
        s = math.isqrt(disc)
        if s * s != disc:
            continue
        for num in {-B0 + s, -B0 - s}:
            if num % 2:
                continue
            a = num // 2
            if 2 * a * b + B0 * b + B1 * a + C1 == 0:
                roots.add(R.from_coords([a, b]))
    return roots


@dataclass(frozen=True)
class PrimoidResult:
    """Outcome of :func:`is_primoid`.

    ``witness`` is a pair ``(a, b)`` with ``p^2 | ab`` but ``p ∤ a`` and
    ``p ∤ b`` when the answer is negative.  ``bounded`` marks a positive
    answer that only holds up to the requested search bound.
    """

    is_primoid: bool
    witness: tuple | None = None
    bounded: bool = False

    def __bool__(self):
        return self.is_primoid


def _prime_factors(n: int) -> dict:
    n = abs(n)
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_primoid(p: RingElem, bound: int | None = None) -> PrimoidResult:
    """Decide whether ``p^2 | ab`` forces ``p | a`` or ``p | b``."""
    R = p.ring
    if R.enumerable:
        elems = list(R.elements())
        multiples_p = {(p * x).v for x in elems}
        multiples_p2 = {(p * p * x).v for x in elems}
        outside = [x for x in elems if x.v not in multiples_p]
        for i, a in enumerate(outside):
            for b in outside[i:]:
                if (a * b).v in multiples_p2:
                    return PrimoidResult(False, (a, b))
        return PrimoidResult(True)
    if isinstance(R, Integers):
        n = p.v
        if n == 0 or abs(n) == 1:
            return PrimoidResult(True)
        factors = _prime_factors(n)
        if len(factors) == 1:
            return PrimoidResult(True)
        q, e = min(factors.items())
        a = q ** (2 * e)
        rest = abs(n) // q**e
        return PrimoidResult(False, (R(a), R(rest * rest)))
    if isinstance(R, Rationals):
        return PrimoidResult(True)
    d = _quadratic_order_d(R)
    if d is not None:
        if bound is None:
            raise CapabilityError(f"primoid search in {R} needs an explicit bound")
        return _primoid_quadratic(p, bound)
    raise CapabilityError(f"primoid test is not available over {R}")


def _divides_quadratic(p: RingElem, x: RingElem) -> bool:
    """``p | x`` in a quadratic order, by solving ``p * (c0 + c1 u) = x`` over Z."""
    R = p.ring
    if p.is_zero():
        return x.is_zero()
    M = R.mult_matrix(p)
    a, b = M[0][0].v, M[0][1].v
    c, e = M[1][0].v, M[1][1].v
    det = a * e - b * c
    x0, x1 = x.v
    if det == 0:
        # p is a zero divisor; fall back to a bounded search is not needed for
        # the rings we support (d not a square gives det = norm(p) != 0)
        raise CapabilityError("divisibility by a zero divisor in a quadratic order")
    n0 = e * x0 - b * x1
    n1 = -c * x0 + a * x1
    return n0 % det == 0 and n1 % det == 0


def _quadratic_search_order(bound: int):
    coords = [(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1) if (a, b) != (0, 0)]
    coords.sort(key=lambda ab: (max(abs(ab[0]), abs(ab[1])), abs(ab[0]) + abs(ab[1]), ab[1] != 0, -ab[0], -ab[1]))
    return coords


def _primoid_quadratic(p: RingElem, bound: int) -> PrimoidResult:
    R = p.ring
    p2 = p * p
    elems = [R.from_coords(ab) for ab in _quadratic_search_order(bound)]
    outside = [x for x in elems if not _divides_quadratic(p, x)]
    for i, a in enumerate(outside):
        for b in outside[i:]:
            if _divides_quadratic(p2, a * b):
                return PrimoidResult(False, (a, b))
    return PrimoidResult(True, bounded=True)
