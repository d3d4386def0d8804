"""Exactly computable commutative base rings and their elements.

The tower is built from ``Integers``, ``Rationals``, ``IntegersMod(m)`` and
``PrimeField(p)`` by adjoining polynomial variables (``PolyExt``) or one root
of a monic polynomial (``QuotExt``).  Every ring is an immutable descriptor;
elements are :class:`RingElem` values wrapping a canonical payload:

===========  ==========================================================
ring         payload
===========  ==========================================================
Integers     ``int``
Rationals    ``Fraction`` in lowest terms
Z/m, GF(p)   ``int`` residue in ``[0, m)``
QuotExt      tuple of ``deg(modulus)`` base payloads (low degree first)
PolyExt      sorted tuple of ``(exponents, coefficient payload)`` pairs
===========  ==========================================================

Descriptors print in the compact grammar accepted by :func:`parse_ring`,
e.g. ``Z[u]/(u^2 - 5)`` or ``GF(2)[x]/(x^3 + x + 1)``.
"""

from __future__ import annotations

import ast
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from .errors import CapabilityError, HomomorphismError, NotInvertibleError, ParseError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def grlex_key(exps):
    return (sum(exps), exps)


class Ring:
    """Common interface of all ring descriptors.

    Subclasses implement the payload-level primitives (``_add``, ``_mul``,
    ...).  User code normally works with :class:`RingElem` values created by
    calling the ring, e.g. ``ZZ(5)`` or ``R.parse("1 + u")``.
    """

    is_field = False
    is_domain_known = False
    enumerable = False

    # -- element construction -------------------------------------------
    def __call__(self, x=0) -> "RingElem":
        if isinstance(x, RingElem):
            return self.embed(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return RingElem(self, self._from_int(x))
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return RingElem(self, self._from_int(x.numerator))
            return RingElem(self, self._from_int(x.numerator)) * self(x.denominator).inverse()
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot convert {x!r} into {self}")

    @cached_property
    def zero(self) -> "RingElem":
        return RingElem(self, self._from_int(0))

    @cached_property
    def one(self) -> "RingElem":
        return RingElem(self, self._from_int(1))

    def embed(self, x: "RingElem") -> "RingElem":
        """Map ``x`` from a ring lower in the tower into this ring."""
        if x.ring is self or x.ring == self:
            return x
        raise TypeError(f"cannot embed element of {x.ring} into {self}")

    def parse(self, text: str) -> "RingElem":
        return parse_element(self, text)

    # -- tower structure --------------------------------------------------
    def generators(self) -> dict:
        """Named generators of the whole tower, as elements of this ring."""
        return {}

    def base_chain(self):
        r = self
        while r is not None:
            yield r
            r = getattr(r, "base", None)

    @property
    def bottom(self) -> "Ring":
        return list(self.base_chain())[-1]

    @property
    def linear_algebra_capable(self) -> bool:
        return isinstance(self, (Integers, Rationals, IntegersMod)) or self.is_field

    # -- enumeration ------------------------------------------------------
    def elements(self) -> Iterator["RingElem"]:
        raise CapabilityError(f"{self} is not enumerable")

    def cardinality(self) -> int:
        raise CapabilityError(f"{self} is not enumerable")

    # -- payload primitives (override) -----------------------------------
    def _from_int(self, n):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _mul(self, a, b):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        return a == self._from_int(0)

    def _inv(self, a):
        raise NotInvertibleError(f"inversion not available in {self}")

    def _is_unit(self, a) -> bool:
        try:
            self._inv(a)
        except NotInvertibleError:
            return False
        return True

    def _fmt(self, a) -> str:
        return str(a)

    def _simple(self, a) -> bool:
        """True if the printed payload needs no parentheses as a coefficient."""
        return True


def modulus_of(ring) -> int | None:
    """Residue modulus when ``ring`` is ``Z/m`` or ``GF(p)``, else ``None``."""
    if isinstance(ring, IntegersMod):
        return ring.m
    return None


@dataclass(frozen=True)
class Integers(Ring):
    is_domain_known = True

    def __str__(self):
        return "Z"

    def _from_int(self, n):
        return int(n)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _inv(self, a):
        if a in (1, -1):
            return a
        raise NotInvertibleError(f"{a} is not a unit in Z")

    def _simple(self, a):
        return True


@dataclass(frozen=True)
class Rationals(Ring):
    is_field = True
    is_domain_known = True

    def __str__(self):
        return "Q"

    def _from_int(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _inv(self, a):
        if a == 0:
            raise NotInvertibleError("division by zero in Q")
        return 1 / a

    def embed(self, x):
        if isinstance(x.ring, Integers):
            return RingElem(self, Fraction(x.v))
        return super().embed(x)

    def _fmt(self, a):
        return str(a)

    def _simple(self, a):
        return a.denominator == 1


@dataclass(frozen=True)
class IntegersMod(Ring):
    m: int

    enumerable = True

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError(f"Z/m requires an integer m >= 2, got {self.m!r}")

    def __str__(self):
        return f"Z/{self.m}"

    @property
    def is_domain_known(self):
        return is_prime(self.m)

    def _from_int(self, n):
        return int(n) % self.m

    def _add(self, a, b):
        return (a + b) % self.m

    def _neg(self, a):
        return (-a) % self.m

    def _sub(self, a, b):
        return (a - b) % self.m

    def _mul(self, a, b):
        return (a * b) % self.m

    def _is_zero(self, a):
        return a == 0

    def _inv(self, a):
        if math.gcd(a, self.m) != 1:
            raise NotInvertibleError(f"{a} is not a unit in {self}")
        return pow(a, -1, self.m)

    def _is_unit(self, a):
        return math.gcd(a, self.m) == 1

    def embed(self, x):
        if isinstance(x.ring, Integers):
            return RingElem(self, x.v % self.m)
        return super().embed(x)

    def elements(self):
        for r in range(self.m):
            yield RingElem(self, r)

    def cardinality(self):
        return self.m


@dataclass(frozen=True)
class PrimeField(IntegersMod):
    is_field = True

    def __post_init__(self):
        if not isinstance(self.m, int) or not is_prime(self.m):
            raise ValueError(f"GF(p) requires a prime p, got {self.m!r}")

    @property
    def p(self):
        return self.m

    @property
    def is_domain_known(self):
        return True

    def __str__(self):
        return f"GF({self.m})"


def GF(p: int) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class PolyExt(Ring):
    """Polynomial ring ``base[variables]`` with sparse exponent-map payloads."""

    base: Ring
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("PolyExt needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        taken = set(self.base.generators())
        clash = taken.intersection(self.variables)
        if clash:
            raise ValueError(f"variable names already used in the tower: {sorted(clash)}")

    def __str__(self):
        return f"{self.base}[{','.join(self.variables)}]"

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def is_domain_known(self):
        return self.base.is_domain_known

    @property
    def linear_algebra_capable(self):
        return False

    def generators(self):
        gens = {k: self.embed(v) for k, v in self.base.generators().items()}
        for i, name in enumerate(self.variables):
            gens[name] = self.var(i)
        return gens

    def var(self, i) -> "RingElem":
        if isinstance(i, str):
            i = self.variables.index(i)
        e = tuple(1 if j == i else 0 for j in range(self.nvars))
        return RingElem(self, ((e, self.base._from_int(1)),))

    def monomial(self, exps, coeff=None) -> "RingElem":
        c = self.base.one if coeff is None else self.base(coeff)
        if c.is_zero():
            return self.zero
        return RingElem(self, ((tuple(exps), c.v),))

    def from_dict(self, d) -> "RingElem":
        """Build an element from ``{exponents: coefficient}``."""
        out = {}
        for e, c in d.items():
            c = self.base(c).v
            if not self.base._is_zero(c):
                out[tuple(e)] = c
        return RingElem(self, self._canon(out))

    def terms(self, x: "RingElem"):
        """Yield ``(exponents, base RingElem)`` pairs of ``x``."""
        for e, c in x.v:
            yield e, RingElem(self.base, c)

    def embed(self, x):
        if x.ring is self or x.ring == self:
            return x
        c = self.base.embed(x)
        if c.is_zero():
            return self.zero
        return RingElem(self, (((0,) * self.nvars, c.v),))

    def _canon(self, d):
        z = self.base._is_zero
        return tuple(sorted((e, c) for e, c in d.items() if not z(c)))

    def _from_int(self, n):
        c = self.base._from_int(n)
        if self.base._is_zero(c):
            return ()
        return (((0,) * self.nvars, c),)

    def _add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        d = dict(a)
        add = self.base._add
        for e, c in b:
            if e in d:
                d[e] = add(d[e], c)
            else:
                d[e] = c
        return self._canon(d)

    def _neg(self, a):
        neg = self.base._neg
        return tuple((e, neg(c)) for e, c in a)

    def _mul(self, a, b):
        if not a or not b:
            return ()
        d = {}
        add, mul = self.base._add, self.base._mul
        for e1, c1 in a:
            for e2, c2 in b:
                e = tuple(x + y for x, y in zip(e1, e2))
                p = mul(c1, c2)
                if e in d:
                    d[e] = add(d[e], p)
                else:
                    d[e] = p
        return self._canon(d)

    def _is_zero(self, a):
        return not a

    def _inv(self, a):
        if len(a) == 1 and not any(a[0][0]):
            return (((0,) * self.nvars, self.base._inv(a[0][1])),)
        raise NotInvertibleError("only constant polynomials are inverted")

    def _simple(self, a):
        return len(a) == 1 and self.base._simple(a[0][1])

    def _fmt(self, a):
        if not a:
            return "0"
        terms = sorted(a, key=lambda t: grlex_key(t[0]), reverse=True)
        pieces = []
        for e, c in terms:
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            pieces.append(_term(self.base._fmt(c), self.base._simple(c), mono))
        return _join_terms(pieces)

    def degree(self, x) -> int:
        return max((sum(e) for e, _ in x.v), default=-1)

    def leading_term(self, x):
        """Leading ``(exponents, coefficient payload)`` in graded-lex order."""
        return max(x.v, key=lambda t: grlex_key(t[0]))

    def evaluate(self, x, values: dict):
        """Substitute ring elements for variables (by name or index)."""
        vals = []
        for i, name in enumerate(self.variables):
            vals.append(values[name] if name in values else values[i])
        target = vals[0].ring if vals and isinstance(vals[0], RingElem) else None
        total = None
        for e, c in self.terms(x):
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            total = t if total is None else total + t
        if total is None:
            return target.zero if target is not None else self.base.zero
        return total


@dataclass(frozen=True)
class QuotExt(Ring):
    """``base[var]/(modulus)`` for a monic modulus ``var^d + c_{d-1} var^{d-1} + ...``.

    ``modulus`` holds the non-leading coefficients ``(c_0, ..., c_{d-1})`` as
    base payloads.
    """

    base: Ring
    var: str
    modulus: tuple

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(self.modulus))
        if len(self.modulus) < 1:
            raise ValueError("QuotExt modulus must have degree >= 1")
        if self.var in self.base.generators():
            raise ValueError(f"variable {self.var!r} already used in the tower")

    @classmethod
    def from_coeffs(cls, base: Ring, var: str, coeffs) -> "QuotExt":
        """``coeffs`` = ``[c_0, ..., c_{d-1}, 1]`` (monic, low degree first)."""
        cs = [base(c) for c in coeffs]
        if cs[-1] != base.one:
            raise ValueError("QuotExt modulus must be monic")
        return cls(base, var, tuple(c.v for c in cs[:-1]))

    @property
    def degree(self):
        return len(self.modulus)

    def __str__(self):
        coeffs = [RingElem(self.base, c) for c in self.modulus] + [self.base.one]
        return f"{self.base}[{self.var}]/({format_univariate(coeffs, self.var)})"

    @cached_property
    def enumerable(self):
        return self.base.enumerable

    @cached_property
    def is_field(self):
        if not isinstance(self.base, PrimeField):
            return False
        return _irreducible_over_prime_field(self.base, [RingElem(self.base, c) for c in self.modulus])

    @property
    def is_domain_known(self):
        return self.is_field

    @property
    def linear_algebra_capable(self):
        return self.is_field

    def generators(self):
        gens = {k: self.embed(v) for k, v in self.base.generators().items()}
        gens[self.var] = self.gen
        return gens

    @cached_property
    def gen(self) -> "RingElem":
        z, o = self.base._from_int(0), self.base._from_int(1)
        if self.degree == 1:
            return RingElem(self, (self.base._neg(self.modulus[0]),))
        return RingElem(self, tuple(o if i == 1 else z for i in range(self.degree)))

    def from_coords(self, coords) -> "RingElem":
        cs = tuple(self.base(c).v for c in coords)
        if len(cs) != self.degree:
            raise ValueError("wrong number of coordinates")
        return RingElem(self, cs)

    def coords(self, x) -> list:
        return [RingElem(self.base, c) for c in x.v]

    def embed(self, x):
        if x.ring is self or x.ring == self:
            return x
        c = self.base.embed(x)
        z = self.base._from_int(0)
        return RingElem(self, (c.v,) + (z,) * (self.degree - 1))

    def _from_int(self, n):
        z = self.base._from_int(0)
        return (self.base._from_int(n),) + (z,) * (self.degree - 1)

    def _add(self, a, b):
        add = self.base._add
        return tuple(add(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        neg = self.base._neg
        return tuple(neg(x) for x in a)

    def _mul(self, a, b):
        B = self.base
        d = self.degree
        prod = [B._from_int(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if B._is_zero(x):
                continue
            for j, y in enumerate(b):
                if B._is_zero(y):
                    continue
                prod[i + j] = B._add(prod[i + j], B._mul(x, y))
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if B._is_zero(c):
                continue
            # var^d = -(c_0 + ... + c_{d-1} var^{d-1})
            for i, mi in enumerate(self.modulus):
                prod[k - d + i] = B._sub(prod[k - d + i], B._mul(c, mi))
            prod[k] = B._from_int(0)
        return tuple(prod[:d])

    def _is_zero(self, a):
        z = self.base._is_zero
        return all(z(x) for x in a)

    def mult_matrix(self, x):
        """Matrix (list of rows over the base) of multiplication by ``x``."""
        cols = []
        basis = [RingElem(self, tuple(self.base._from_int(1 if i == j else 0) for i in range(self.degree)))
                 for j in range(self.degree)]
        for b in basis:
            cols.append((x * b).v)
        return [[RingElem(self.base, cols[j][i]) for j in range(self.degree)] for i in range(self.degree)]

    def _inv(self, a):
        from .matrices import adjugate, determinant

        M = self.mult_matrix(RingElem(self, a))
        det = determinant(M, self.base)
        dinv = det.inverse()
        adj = adjugate(M, self.base)
        one = [self.base.one if i == 0 else self.base.zero for i in range(self.degree)]
        coords = []
        for i in range(self.degree):
            s = self.base.zero
            for j in range(self.degree):
                s = s + adj[i][j] * one[j]
            coords.append((s * dinv).v)
        return tuple(coords)

    def norm(self, x) -> "RingElem":
        from .matrices import determinant

        return determinant(self.mult_matrix(x), self.base)

    def elements(self):
        if not self.base.enumerable:
            raise CapabilityError(f"{self} is not enumerable")
        base_elems = [e.v for e in self.base.elements()]
        for combo in itertools.product(base_elems, repeat=self.degree):
            yield RingElem(self, tuple(combo))

    def cardinality(self):
        return self.base.cardinality() ** self.degree

    def _simple(self, a):
        nz = [i for i, c in enumerate(a) if not self.base._is_zero(c)]
        return len(nz) <= 1 and all(self.base._simple(a[i]) for i in nz)

    def _fmt(self, a):
        return format_univariate([RingElem(self.base, c) for c in a], self.var)


def _irreducible_over_prime_field(F, lower_coeffs) -> bool:
    """Irreducibility of a monic polynomial over GF(p) by trial division."""
    p = F.m
    f = [c.v for c in lower_coeffs] + [1]
    d = len(f) - 1
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            g = list(tail) + [1]
            if _poly_rem_mod(f, g, p) == [0] * (len(g) - 1):
                return False
    return True


def _poly_rem_mod(f, g, p):
    r = list(f)
    dg = len(g) - 1
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k] % p
        if c:
            for i in range(dg + 1):
                r[k - dg + i] = (r[k - dg + i] - c * g[i]) % p
    return [x % p for x in r[:dg]]


class RingElem:
    """An element of a :class:`Ring`, with arithmetic operators.

    ``int`` operands are coerced; elements of rings lower in the tower are
    embedded automatically.
    """

    __slots__ = ("ring", "v")

    def __init__(self, ring: Ring, v):
        self.ring = ring
        self.v = v

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ring is self.ring or other.ring == self.ring:
                return self, other
            try:
                return self, self.ring.embed(other)
            except TypeError:
                return other.ring.embed(self), other
        if isinstance(other, (int, Fraction)):
            return self, self.ring(other)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        a, b = c
        return RingElem(a.ring, a.ring._add(a.v, b.v))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        a, b = c
        return RingElem(a.ring, a.ring._sub(a.v, b.v))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        a, b = c
        return RingElem(a.ring, a.ring._sub(b.v, a.v))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        a, b = c
        return RingElem(a.ring, a.ring._mul(a.v, b.v))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring._neg(self.v))

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, RingElem):
            if other.ring is self.ring or other.ring == self.ring:
                return self.v == other.v
            try:
                a, b = self._coerce(other)
            except TypeError:
                return False
            return a.v == b.v
        if isinstance(other, (int, Fraction)):
            try:
                return self.v == self.ring(other).v
            except (TypeError, NotInvertibleError):
                return False
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return not self.ring._is_zero(self.v)

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.v)

    def is_unit(self) -> bool:
        return self.ring._is_unit(self.v)

    def inverse(self) -> "RingElem":
        return RingElem(self.ring, self.ring._inv(self.v))

    def __truediv__(self, other):
        a, b = self._coerce(other)
        return a * b.inverse()

    def __str__(self):
        return self.ring._fmt(self.v)

    def __repr__(self):
        return f"RingElem({self.ring}, {self.ring._fmt(self.v)})"

    def __int__(self):
        if isinstance(self.ring, (Integers, IntegersMod)):
            return int(self.v)
        if isinstance(self.ring, Rationals) and self.v.denominator == 1:
            return int(self.v)
        raise TypeError(f"{self!r} is not an integer")


# --- formatting helpers ------------------------------------------------------

def _term(coeff: str, simple: bool, mono: str) -> str:
    if not mono:
        return coeff if simple else f"({coeff})"
    if coeff == "1":
        return mono
    if coeff == "-1":
        return "-" + mono
    if not simple:
        return f"({coeff})*{mono}"
    return f"{coeff}*{mono}"


def _join_terms(pieces) -> str:
    out = pieces[0]
    for p in pieces[1:]:
        if p.startswith("-") and not p.startswith("-("):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def format_univariate(coeffs, var: str) -> str:
    """Format ``sum coeffs[i] * var^i`` (RingElem coefficients), highest first."""
    pieces = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c.is_zero():
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        pieces.append(_term(str(c), c.ring._simple(c.v), mono))
    if not pieces:
        return "0"
    return _join_terms(pieces)


# --- parsing -----------------------------------------------------------------

def parse_element(ring: Ring, text: str, names: dict | None = None) -> RingElem:
    """Parse infix text (``^`` for powers) into an element of ``ring``.

    ``names`` maps extra identifiers to elements; by default every generator
    of the tower is available.
    """
    env = dict(ring.generators())
    if names:
        env.update(names)
    src = text.replace("^", "**").strip()
    if not src:
        raise ParseError("empty expression", text, 0)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}", text, exc.offset) from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return ring(node.value)
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise ParseError(f"unknown name {node.id!r} in {ring}", text, node.col_offset)
            return ring(env[node.id]) if env[node.id].ring != ring else env[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ParseError("exponent must be a non-negative integer", text, node.right.col_offset)
                if node.right.value < 0:
                    raise ParseError("negative exponent", text, node.right.col_offset)
                return ev(node.left) ** node.right.value
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                try:
                    return left * right.inverse()
                except NotInvertibleError:
                    raise ParseError(f"{right} is not invertible in {ring}", text, node.col_offset) from None
        raise ParseError(f"unsupported syntax in {text!r}", text, getattr(node, "col_offset", None))

    return ev(tree)


def parse_univariate(ring: Ring, text: str, var: str = "x") -> list:
    """Parse a polynomial in ``var`` over ``ring``; return coefficients low→high."""
    if var in ring.generators():
        raise ParseError(f"variable {var!r} clashes with a ring generator", text)
    P = PolyExt(ring, (var,))
    p = P.parse(text)
    deg = P.degree(p)
    coeffs = [ring.zero] * (max(deg, 0) + 1)
    for e, c in P.terms(p):
        coeffs[e[0]] = c
    return coeffs


def parse_ring(text: str) -> Ring:
    """Parse a ring descriptor such as ``Z[a,b]`` or ``GF(2)[x]/(x^3+x+1)``."""
    s = text.replace(" ", "")
    pos = 0

    def fail(msg):
        raise ParseError(msg, text, pos)

    if s.startswith("GF("):
        end = s.find(")")
        if end < 0:
            fail("unterminated GF(")
        digits = s[3:end]
        if not digits.isdigit():
            fail("GF(p) needs an integer p")
        p = int(digits)
        if not is_prime(p):
            raise ParseError(f"GF({p}): {p} is not prime", text, 3)
        ring: Ring = PrimeField(p)
        pos = end + 1
    elif s.startswith("Z/"):
        pos = 2
        inner = s[pos:]
        if inner.startswith("("):
            end = inner.find(")")
            digits = inner[1:end]
            pos += end + 1
        else:
            k = 0
            while k < len(inner) and inner[k].isdigit():
                k += 1
            digits = inner[:k]
            pos += k
        if not digits.isdigit() or int(digits) < 2:
            fail("Z/m needs an integer m >= 2")
        ring = IntegersMod(int(digits))
    elif s.startswith("Z"):
        ring = Integers()
        pos = 1
    elif s.startswith("Q"):
        ring = Rationals()
        pos = 1
    else:
        fail(f"unknown base ring in {text!r}")

    while pos < len(s):
        if s[pos] != "[":
            fail(f"expected '[' in {text!r}")
        end = s.find("]", pos)
        if end < 0:
            fail("unterminated '['")
        names = s[pos + 1:end].split(",")
        for nm in names:
            if not nm.isidentifier():
                fail(f"bad variable name {nm!r}")
        pos = end + 1
        if s.startswith("/(", pos):
            depth = 0
            k = pos + 1
            while k < len(s):
                if s[k] == "(":
                    depth += 1
                elif s[k] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                k += 1
            if depth != 0:
                fail("unbalanced parentheses in modulus")
            if len(names) != 1:
                raise CapabilityError("quotients of multivariate rings are not supported")
            try:
                coeffs = parse_univariate(ring, s[pos + 2:k], names[0])
            except ParseError as exc:
                raise ParseError(f"bad modulus: {exc}", text, pos + 2) from None
            if len(coeffs) < 2 or coeffs[-1] != ring.one:
                raise ParseError("modulus must be monic of degree >= 1", text, pos + 2)
            ring = QuotExt(ring, names[0], tuple(c.v for c in coeffs[:-1]))
            pos = k + 1
        else:
            try:
                ring = PolyExt(ring, tuple(names))
            except ValueError as exc:
                raise ParseError(str(exc), text, pos) from None
    return ring


def enumerate_elements(R: Ring) -> Iterator[RingElem]:
    """Every element of an enumerable ring exactly once."""
    if not R.enumerable:
        raise CapabilityError(f"{R} is not enumerable")
    return R.elements()


# --- ring homomorphisms ------------------------------------------------------

class RingMap:
    """A ring homomorphism between towers, fixed by the images of generators.

    The bottom layer maps canonically (``Z → anything``, ``Z/m → Z/m'`` for
    ``m' | m``, ``Q → Q``).  Generators not listed in ``images`` go to the
    generator of the same name in the target when one exists.
    """

    def __init__(self, source: Ring, target: Ring, images: dict | None = None):
        self.source = source
        self.target = target
        tgens = target.generators()
        self.images = {}
        for r in source.base_chain():
            names = r.variables if isinstance(r, PolyExt) else (r.var,) if isinstance(r, QuotExt) else ()
            for nm in names:
                if images and nm in images:
                    img = images[nm]
                    self.images[nm] = target(img) if not isinstance(img, str) else target.parse(img)
                elif nm in tgens:
                    self.images[nm] = tgens[nm]
                else:
                    raise CapabilityError(f"no image given for generator {nm!r}")
        self._check_bottom(source.bottom, target.bottom)
        for r in source.base_chain():
            if isinstance(r, QuotExt):
                img = self.images[r.var]
                val = img ** r.degree
                for i, c in enumerate(r.modulus):
                    val = val + self._map(r.base, c) * img**i
                if not val.is_zero():
                    raise HomomorphismError(f"image of {r.var} does not satisfy its modulus in {target}")

    @staticmethod
    def _check_bottom(s, t):
        if isinstance(s, Integers):
            return
        if isinstance(s, IntegersMod) and isinstance(t, IntegersMod) and s.m % t.m == 0:
            return
        if isinstance(s, Rationals) and isinstance(t, Rationals):
            return
        raise CapabilityError(f"unsupported ring map {s} -> {t}")

    def _map(self, ring, v) -> RingElem:
        T = self.target
        if isinstance(ring, PolyExt):
            total = T.zero
            for e, c in v:
                t = self._map(ring.base, c)
                for nm, k in zip(ring.variables, e):
                    if k:
                        t = t * self.images[nm] ** k
                total = total + t
            return total
        if isinstance(ring, QuotExt):
            img = self.images[ring.var]
            total = T.zero
            for i, c in enumerate(v):
                total = total + self._map(ring.base, c) * img**i
            return total
        if isinstance(ring, Rationals):
            return T(v)
        return T(int(v))

    def __call__(self, x: RingElem) -> RingElem:
        x = self.source(x) if not (isinstance(x, RingElem) and (x.ring == self.source)) else x
        return self._map(self.source, x.v)

    def __repr__(self):
        return f"RingMap({self.source} -> {self.target}, {', '.join(f'{k}->{v}' for k, v in self.images.items())})"


ZZ = Integers()
QQ = Rationals()
