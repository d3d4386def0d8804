"""Multivariate polynomial helpers on top of :class:`PolyExt`."""

from __future__ import annotations

from .errors import DivisibilityError, NotInvertibleError
from .rings import Integers, PolyExt, RingElem, grlex_key


def _coeff_div(base, a, b):
    """Exact quotient of base payloads ``a / b``."""
    if isinstance(base, Integers):
        q, r = divmod(a, b)
        if r:
            raise DivisibilityError(f"{a} is not divisible by {b}")
        return q
    try:
        return base._mul(a, base._inv(b))
    except NotInvertibleError:
        raise DivisibilityError(f"cannot divide by {base._fmt(b)} in {base}") from None


def poly_exact_divide(num: RingElem, den: RingElem) -> RingElem:
    """``q`` with ``num == q * den``, by graded-lex long division.

    Raises :class:`DivisibilityError` when the remainder does not vanish; the
    callers use this as a correctness check, never as a fallback.
    """
    P = num.ring
    if not isinstance(P, PolyExt):
        raise TypeError("poly_exact_divide expects polynomial ring elements")
    den = P(den)
    if den.is_zero():
        raise DivisibilityError("division by the zero polynomial")
    base = P.base
    lead_e, lead_c = max(den.v, key=lambda t: grlex_key(t[0]))
    q = {}
    r = num
    while not r.is_zero():
        e, c = max(r.v, key=lambda t: grlex_key(t[0]))
        shift = tuple(x - y for x, y in zip(e, lead_e))
        if any(s < 0 for s in shift):
            raise DivisibilityError(f"{num} is not divisible by {den}")
        qc = _coeff_div(base, c, lead_c)
        q[shift] = qc
        term = RingElem(P, ((shift, qc),))
        r = r - term * den
    return P.from_dict({e: RingElem(base, c) for e, c in q.items()})


def permute_variables(p: RingElem, perm) -> RingElem:
    """Substitute ``x_i -> x_{perm[i]}`` (0-based one-line notation)."""
    P = p.ring
    n = P.nvars
    out = {}
    for e, c in p.v:
        new = [0] * n
        for i, k in enumerate(e):
            new[perm[i]] += k
        out[tuple(new)] = c
    return RingElem(P, P._canon(out))
