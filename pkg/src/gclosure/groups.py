"""Permutation groups with fully enumerated elements.

Permutations are 0-based one-line tuples ``σ = (σ(0), ..., σ(n-1))`` and
compose right to left: ``compose(σ, τ)(i) = σ(τ(i))``.  Text uses 1-based
cycle notation, e.g. ``[(1,3),(1,2,3,4)]``.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import cached_property

from .errors import ParseError


def identity(n: int) -> tuple:
    return tuple(range(n))


def compose(s, t) -> tuple:
    return tuple(s[i] for i in t)


def inverse(s) -> tuple:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def sign(s) -> int:
    seen = [False] * len(s)
    parity = 0
    for i in range(len(s)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = s[j]
            length += 1
        parity += length - 1
    return -1 if parity % 2 else 1


def from_cycles(cycles, n: int) -> tuple:
    """Permutation from 1-based cycles ``[(1, 2, 3), (4, 5)]``."""
    p = list(range(n))
    for cyc in cycles:
        c = [x - 1 for x in cyc]
        if any(x < 0 or x >= n for x in c) or len(set(c)) != len(c):
            raise ValueError(f"bad cycle {cyc} for degree {n}")
        # cycles compose right to left, like the permutations themselves
        step = list(range(n))
        for a, b in zip(c, c[1:] + c[:1]):
            step[a] = b
        p = [p[step[x]] for x in range(n)]
    return tuple(p)


def to_cycles(s) -> list:
    """1-based cycle list without fixed points."""
    seen = set()
    out = []
    for i in range(len(s)):
        if i in seen or s[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = s[j]
        out.append(tuple(cyc))
    return out


def format_perm(s) -> str:
    cyc = to_cycles(s)
    if not cyc:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


class PermGroup:
    """A subgroup of ``S_n`` given by generators; elements are enumerated."""

    def __init__(self, degree: int, generators=(), name: str | None = None):
        self.degree = degree
        gens = [tuple(g) for g in generators]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of degree {degree}")
        self.generators = [g for g in gens if g != identity(degree)]
        self.name = name

    @cached_property
    def elements(self) -> list:
        e = identity(self.degree)
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = compose(g, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, s):
        return tuple(s) in self.element_set

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self):
        return hash((self.degree, self.element_set))

    def __le__(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def __str__(self):
        if self.name:
            return self.name
        return "[" + ",".join(format_perm(g) for g in self.generators) + "]" if self.generators else "1"

    def __repr__(self):
        return f"PermGroup({self}, degree={self.degree}, order={self.order})"

    def conjugate(self, s) -> "PermGroup":
        """``s G s^{-1}``."""
        si = inverse(s)
        gens = [compose(compose(s, g), si) for g in self.generators]
        return PermGroup(self.degree, gens)

    def normalizer(self) -> list:
        """Elements of ``S_n`` normalizing this group."""
        return [s for s in itertools.permutations(range(self.degree))
                if self.conjugate(s) == self]

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self <= other

    def index_in(self, other: "PermGroup") -> int:
        if not self <= other:
            raise ValueError(f"{self} is not a subgroup of {other}")
        return other.order // self.order


def symmetric(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        gens.append(from_cycles([(1, 2)], n))
    if n >= 3:
        gens.append(from_cycles([tuple(range(1, n + 1))], n))
    return PermGroup(n, gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    gens = [from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]
    return PermGroup(n, gens, name=f"A{n}")


def trivial(n: int) -> PermGroup:
    return PermGroup(n, [], name="1")


def dihedral4() -> PermGroup:
    return PermGroup(4, [from_cycles([(1, 3)], 4), from_cycles([(1, 2, 3, 4)], 4)], name="D4")


def cyclic4() -> PermGroup:
    return PermGroup(4, [from_cycles([(1, 2, 3, 4)], 4)], name="C4")


def klein4() -> PermGroup:
    return PermGroup(4, [from_cycles([(1, 2), (3, 4)], 4), from_cycles([(1, 3), (2, 4)], 4)], name="V4")


def young(sizes) -> PermGroup:
    """``S_{n_1} × ... × S_{n_k}`` on consecutive blocks of ``{1..n}``."""
    n = sum(sizes)
    gens = []
    start = 1
    for k in sizes:
        if k >= 2:
            gens.append(from_cycles([(start, start + 1)], n))
        if k >= 3:
            gens.append(from_cycles([tuple(range(start, start + k))], n))
        start += k
    return PermGroup(n, gens, name="x".join(f"S{k}" for k in sizes))


_NAMED = re.compile(r"^(S|A)(\d+)$")


def parse_group(text: str, degree: int | None = None) -> PermGroup:
    """Parse ``S4``, ``A3``, ``D4``, ``C4``, ``V4``, ``S2xS2``, ``1`` or cycles."""
    s = text.replace(" ", "")
    if s == "1":
        if degree is None:
            raise ParseError("the trivial group needs a degree", text)
        return trivial(degree)
    if s in ("D4", "C4", "V4"):
        g = {"D4": dihedral4, "C4": cyclic4, "V4": klein4}[s]()
    elif "x" in s and all(_NAMED.match(p) and p[0] == "S" for p in s.split("x")):
        g = young([int(p[1:]) for p in s.split("x")])
    elif _NAMED.match(s):
        kind, k = s[0], int(s[1:])
        if k < 1:
            raise ParseError("group degree must be positive", text)
        g = symmetric(k) if kind == "S" else alternating(k)
    elif s.startswith("["):
        if degree is None:
            raise ParseError("cycle notation needs the degree of the action", text)
        body = s[1:-1] if s.endswith("]") else None
        if body is None:
            raise ParseError("unterminated '['", text, len(s))
        gens = []
        for piece in _split_generators(body, text):
            cycles = [tuple(int(x) for x in c.split(",") if x) for c in re.findall(r"\(([\d,]*)\)", piece)]
            if re.sub(r"\(([\d,]*)\)", "", piece):
                raise ParseError(f"unexpected text in generator {piece!r}", text)
            try:
                gens.append(from_cycles(cycles, degree))
            except ValueError as exc:
                raise ParseError(str(exc), text) from None
        return PermGroup(degree, gens)
    else:
        raise ParseError(f"unknown group {text!r}", text, 0)
    if degree is not None and g.degree != degree:
        raise ParseError(f"group {text} has degree {g.degree}, expected {degree}", text)
    return g


def _split_generators(body: str, text: str) -> list:
    """Split ``(1,2)(3,4),(1,3)`` at commas outside parentheses."""
    pieces, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", text)
        if ch == "," and depth == 0:
            pieces.append(cur)
            cur = ""
        else:
            cur += ch
    if depth:
        raise ParseError("unbalanced parentheses", text)
    if cur:
        pieces.append(cur)
    return pieces


def group_to_text(G: PermGroup) -> str:
    """Text that :func:`parse_group` maps back to ``G`` (given the degree)."""
    if G.name:
        return G.name
    return "[" + ",".join(format_perm(g) for g in G.generators) + "]"


def factorial(n: int) -> int:
    return math.factorial(n)


def block_product(groups) -> PermGroup:
    """``G_1 × ... × G_k`` acting on consecutive blocks of ``{1..n}``."""
    n = sum(g.degree for g in groups)
    gens = []
    off = 0
    for g in groups:
        for s in g.generators:
            p = list(range(n))
            for i, j in enumerate(s):
                p[off + i] = off + j
            gens.append(tuple(p))
        off += g.degree
    names = [g.name for g in groups]
    if len(groups) == 1:
        name = names[0]
    else:
        # only products of symmetric groups have a parseable name
        name = "x".join(names) if all(nm and _NAMED.match(nm) and nm[0] == "S" for nm in names) else None
    return PermGroup(n, gens, name=name)


def block_restriction(H: PermGroup, start: int, size: int) -> PermGroup:
    """Elements of ``H`` supported on the block ``[start, start + size)``, restricted to it."""
    n = H.degree
    inside = set(range(start, start + size))
    gens = []
    for h in H.elements:
        if all(h[i] == i for i in range(n) if i not in inside):
            gens.append(tuple(h[start + i] - start for i in range(size)))
    return PermGroup(size, gens)
