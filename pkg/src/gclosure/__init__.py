"""Exact computation of G-closure data and closure algebras of rank-n algebras."""

from .algebra import FreeAlgebra, MonicPoly, make_monogenic, make_product, trivial_algebra
from .catalog import (an_closure_from_root, closure_data, cubic_resolvent, d4_construction, discriminant_algebra,
                      factorization_closure, factors_from_datum, stronger_product_check)
from .closure import (ClosureDatum, closure_algebra, enumerate_closure_data, induce, resolvent_algebra,
                      verify_closure_datum)
from .ferrand import ferrand_table
from .groups import parse_group
from .quotient import QuotientAlgebra, is_faithful
from .rings import parse_ring

__version__ = "0.1.0"

__all__ = [
    "ClosureDatum", "FreeAlgebra", "MonicPoly", "QuotientAlgebra", "an_closure_from_root", "closure_algebra",
    "closure_data", "cubic_resolvent", "d4_construction", "discriminant_algebra", "enumerate_closure_data",
    "factorization_closure", "factors_from_datum", "ferrand_table", "induce", "is_faithful", "make_monogenic",
    "make_product", "parse_group", "parse_ring", "resolvent_algebra", "stronger_product_check",
    "trivial_algebra", "verify_closure_datum",
]
