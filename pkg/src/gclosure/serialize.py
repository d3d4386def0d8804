"""JSON documents for rings, algebras, closure data and quotient algebras.

Ring elements are written as text in the ring's own syntax and parsed back
with :meth:`Ring.parse`; field names are listed in ``docs/FORMAT.md``.
"""

from __future__ import annotations

import json

import numpy as np

from . import arrays
from .algebra import FreeAlgebra, MonicPoly, make_monogenic, make_product, trivial_algebra
from .closure import ClosureDatum
from .errors import ParseError
from .groups import group_to_text, parse_group
from .quotient import QuotientAlgebra
from .rings import Ring, parse_ring

FORMAT_NAME = "gclosure"
FORMAT_VERSION = 1


def elem_text(x) -> str:
    return str(x)


def parse_elem(R: Ring, text) -> object:
    if isinstance(text, int):
        return R(text)
    try:
        return R.parse(str(text))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"cannot read {text!r} as an element of {R}: {exc}", str(text)) from None


def _nested_text(R: Ring, arr):
    return json.loads(json.dumps(np.vectorize(lambda s: str(arrays.lift(R, s)), otypes=[object])(arr).tolist()))


def _nested_parse(R: Ring, data):
    if isinstance(data, list):
        return [_nested_parse(R, d) for d in data]
    return parse_elem(R, data)


# --- algebras ---------------------------------------------------------------------------------

def algebra_to_doc(A: FreeAlgebra) -> dict:
    if A.poly is not None:
        return {"poly": A.poly.format("x")}
    factors = getattr(A, "factors", None)
    if factors:
        return {"product": [algebra_to_doc(B) for B in factors]}
    return {
        "basis": list(A.names),
        "unit": [str(arrays.lift(A.ring, u)) for u in A.unit],
        "struct": _nested_text(A.ring, A.struct),
    }


def algebra_from_doc(R: Ring, doc) -> FreeAlgebra:
    """Build an algebra from ``{"poly"}``, ``{"trivial"}``, ``{"product"}`` or a structure table."""
    if isinstance(doc, str):
        return make_monogenic(R, MonicPoly.parse(R, doc, "x"))
    if "poly" in doc:
        return make_monogenic(R, MonicPoly.parse(R, doc["poly"], "x"))
    if "trivial" in doc:
        return trivial_algebra(R, int(doc["trivial"]))
    if "product" in doc:
        parts = [algebra_from_doc(R, d) for d in doc["product"]]
        return make_product(*parts)[0]
    if "struct" in doc:
        struct = _nested_parse(R, doc["struct"])
        unit = _nested_parse(R, doc["unit"])
        return FreeAlgebra(R, struct, unit, names=doc.get("basis"))
    raise ParseError("algebra document needs one of poly, trivial, product, struct", json.dumps(doc))


# --- closure data -----------------------------------------------------------------------------

def datum_to_doc(phi: ClosureDatum) -> dict:
    return {
        "kind": "closure-datum",
        "ring": str(phi.ring),
        "algebra": algebra_to_doc(phi.algebra),
        "group": group_to_text(phi.group),
        "values": {label: str(v) for label, v in phi.rows()},
    }


def datum_from_doc(doc: dict, algebra: FreeAlgebra | None = None) -> ClosureDatum:
    R = algebra.ring if algebra is not None else parse_ring(doc["ring"])
    A = algebra if algebra is not None else algebra_from_doc(R, doc["algebra"])
    G = parse_group(doc["group"], degree=A.rank)
    from .tensors import orbit_basis

    ob = orbit_basis(G, A.rank)
    vals = [None] * ob.size
    for label, text in doc["values"].items():
        try:
            o = ob.label_index(label)
        except ValueError as exc:
            raise ParseError(str(exc), label) from None
        v = parse_elem(R, text)
        if vals[o] is not None and vals[o] != v:
            raise ParseError(f"conflicting values for orbit {ob.rep_label(o)}", label)
        vals[o] = v
    missing = [ob.rep_label(o) for o, v in enumerate(vals) if v is None]
    if missing:
        raise ParseError(f"values missing for orbits {', '.join(missing[:5])}", json.dumps(doc["values"]))
    return ClosureDatum(A, G, vals)


def load_datum(path: str, algebra: FreeAlgebra | None = None) -> ClosureDatum:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc.msg}", exc.doc, exc.pos) from None
    if doc.get("kind") != "closure-datum" and "datum" in doc:
        doc = doc["datum"]
    return datum_from_doc(doc, algebra)


# --- quotient algebras ------------------------------------------------------------------------

def quotient_to_doc(Q: QuotientAlgebra, with_struct: bool = True) -> dict:
    R = Q.ring
    doc = {
        "rank": Q.rank,
        "orders": [int(d) for d in Q.orders],
        "unit": [str(arrays.lift(R, u)) for u in Q.unit],
    }
    if with_struct:
        doc["struct"] = _nested_text(R, Q.struct)
    return doc
