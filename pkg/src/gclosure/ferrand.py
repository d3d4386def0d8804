"""The Ferrand homomorphism ``Φ: (A^{⊗n})^{S_n} → R`` for free ``A``.

For the generic element ``a = Σ t_i θ_i`` over ``R[t_1..t_n]`` we have
``a^{⊗n} = Σ_μ t^μ e_μ`` (sum over multisets ``μ`` of size ``n``) and
``Φ(a^{⊗n}) = N(a) = det(Σ t_i M_{θ_i})``.  Since ``Φ`` commutes with base
change and monomials are linearly independent, ``Φ(e_μ)`` is the coefficient
of ``t^μ`` in that determinant.
"""

from __future__ import annotations

import numpy as np

from . import arrays
from .algebra import FreeAlgebra, generic_char_poly
from .errors import DimensionError
from .groups import symmetric
from .rings import RingElem
from .tensors import InvariantElem, invariant_ring


class FerrandMap:
    """The table ``μ ↦ Φ(e_μ)`` on the ``S_n`` orbit basis (built eagerly)."""

    def __init__(self, A: FreeAlgebra, guard_n: int | None = None):
        self.algebra = A
        self.ring = A.ring
        n = A.rank
        self.invariants = invariant_ring(A, symmetric(n), guard_n=guard_n)
        basis = self.invariants.basis
        P, coeffs = generic_char_poly(A)
        det = coeffs[-1] if n % 2 == 0 else -coeffs[-1]
        by_exp = {e: RingElem(P.base, c) for e, c in det.v}
        table = []
        for o in range(basis.size):
            rep = basis.rep_tuple(o)
            exps = tuple(rep.count(i) for i in range(n))
            table.append(by_exp.get(exps, self.ring.zero))
        self.table = table
        self.values = arrays.from_elems(self.ring, table)
        self.determinant = det

    @property
    def basis(self):
        return self.invariants.basis

    def __getitem__(self, label) -> RingElem:
        """Value on an orbit, by index or by a representative label ``"(1,1,2)"``."""
        if isinstance(label, str):
            label = self.basis.label_index(label)
        return self.table[label]

    def rows(self):
        """``(multiset label, value)`` pairs in canonical order."""
        return [(self.basis.rep_label(o), v) for o, v in enumerate(self.table)]

    def __call__(self, v: InvariantElem) -> RingElem:
        return ferrand_eval(self, v)

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.rows())
        return f"FerrandMap({{{body}}})"


_FERRAND_CACHE: dict = {}


def ferrand_table(A: FreeAlgebra, guard_n: int | None = None) -> FerrandMap:
    hit = _FERRAND_CACHE.get(id(A))
    if hit is not None and hit[0] is A:
        return hit[1]
    F = FerrandMap(A, guard_n=guard_n)
    _FERRAND_CACHE[id(A)] = (A, F)
    return F


def ferrand_eval(phi: FerrandMap, v: InvariantElem) -> RingElem:
    """R-linear extension of the table to an ``S_n``-invariant element."""
    if v.basis is not phi.basis:
        if v.ring_.group != phi.invariants.group or v.ring_.algebra.rank != phi.algebra.rank:
            raise DimensionError("element is not expanded over the S_n orbit basis of this algebra")
    R = phi.ring
    total = arrays.normalize(R, np.asarray(np.dot(np.asarray(v.coords), phi.values)).reshape(1))[0]
    return arrays.lift(R, total)
