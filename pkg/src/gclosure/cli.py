"""Command-line interface: ``gclosure [flags] COMMAND [ARGS]``.

Every command builds a :class:`JobSpec`, runs it through :func:`run` and
prints the resulting report, either as text or as one JSON document
(``--format machine``).  The text form is rendered from the same dictionary,
so the machine form carries everything the text form states.

Exit codes: 0 success (including "no closure data exist"), 2 unreadable or
invalid input, 3 capability, guard or hypothesis failures, 4 internal
consistency failures, 5 suite mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import arrays
from .algebra import MonicPoly, disc_of_basis
from .catalog import (PRIMOID_SEARCH_BOUND, FactorizationDatum, closure_data, cubic_resolvent, d4_construction, discriminant_algebra,
                      factorization_closure, factors_from_datum, monic_factorizations, an_closure_from_root,
                      sqrt_disc_correspondence, stronger_product_check)
from .closure import ClosureDatum, check_closure_guard, closure_algebra, resolvent_algebra, verify_closure_datum
from .errors import (CapabilityError, ClosureError, ConsistencyError, DimensionError, HomomorphismError, HypothesisError,
                     NotAClosureDatum, NotInvariantError, ParseError)
from .groups import alternating, dihedral4, group_to_text, parse_group, symmetric, young
from .quotient import FaithfulResult, is_faithful, primitive_idempotents, check_orthogonal_decomposition
from .roots import find_monic_roots, is_primoid
from .rings import parse_ring
from .tensors import check_tensor_guard
from .serialize import algebra_from_doc, datum_from_doc, datum_to_doc, quotient_to_doc

REPORT_FORMAT = "gclosure-report"
CORPUS_FORMAT = "gclosure-corpus"
VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPABILITY = 3
EXIT_CONSISTENCY = 4
EXIT_MISMATCH = 5

COMMANDS = ("ferrand", "disc-algebra", "resolvent", "enumerate", "verify", "closure-algebra",
            "from-root", "factor-datum", "primoid", "properties", "suite")

# idempotent search is exhaustive, so only attempt it on small closure algebras
IDEMPOTENT_REPORT_LIMIT = 10**5


@dataclass
class JobSpec:
    """One unit of work: inputs, a command and its options.

    ``algebra`` is an algebra document (see :func:`~gclosure.serialize.algebra_from_doc`);
    ``expect`` holds expected result values for suite runs and is ignored by :func:`run`.
    """

    command: str
    ring: str | None = None
    algebra: dict | None = None
    group: str | None = None
    args: list = field(default_factory=list)
    options: dict = field(default_factory=dict)
    id: str | None = None
    expect: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: v for k, v in d.items() if v not in (None, [], {})}

    @classmethod
    def from_dict(cls, d: dict) -> "JobSpec":
        if not isinstance(d, dict) or "command" not in d:
            raise ParseError("a job needs a 'command' field", json.dumps(d))
        unknown = set(d) - {"command", "ring", "algebra", "group", "args", "options", "id", "expect"}
        if unknown:
            raise ParseError(f"unknown job fields: {', '.join(sorted(unknown))}", json.dumps(d))
        if d["command"] not in COMMANDS:
            raise ParseError(f"unknown command {d['command']!r}", d["command"])
        return cls(command=d["command"], ring=d.get("ring"), algebra=d.get("algebra"), group=d.get("group"),
                   args=list(d.get("args", [])), options=dict(d.get("options", {})), id=d.get("id"),
                   expect=dict(d.get("expect", {})))


class Report(dict):
    """The report dictionary; see ``docs/FORMAT.md`` for the fields."""

    @property
    def exit_code(self) -> int:
        return self.get("exit", EXIT_OK)


# --- inputs ---------------------------------------------------------------------------------------

class _Context:
    """Parsed ring, algebra and group of a job, built lazily."""

    def __init__(self, spec: JobSpec):
        self.spec = spec
        self.opts = spec.options
        self._ring = self._algebra = None

    @property
    def ring(self):
        if self._ring is None:
            if not self.spec.ring:
                raise ParseError("--ring is required for this command")
            self._ring = parse_ring(self.spec.ring)
        return self._ring

    @property
    def algebra(self):
        if self._algebra is None:
            if self.spec.algebra is None:
                raise ParseError("an algebra is required (--poly or --algebra-file)")
            self._algebra = algebra_from_doc(self.ring, self.spec.algebra)
            if self.opts.get("guard_n") is not None:
                check_tensor_guard(self._algebra.rank, self._algebra.rank, self.opts["guard_n"])
        return self._algebra

    def group(self, default=None):
        text = self.spec.group or default
        if text is None:
            raise ParseError("--group is required for this command")
        return parse_group(text, degree=self.algebra.rank)

    def datum(self) -> ClosureDatum:
        """The datum named by the options: a document, a root, a factorization or the Ferrand datum."""
        A = self.algebra
        if "datum" in self.opts:
            return datum_from_doc(self.opts["datum"], A)
        G = self.group(default=f"S{A.rank}")
        if "from_root" in self.opts:
            return datum_from_root(A, G, self.opts["from_root"])
        if "factors" in self.opts:
            return factorization_closure(A, parse_factors(self.ring, self.opts["factors"], A))
        if G == symmetric(A.rank):
            return ClosureDatum.ferrand(A)
        raise ParseError(f"no datum given for {group_to_text(G)}: use --datum-file, --from-root or --factors")


def parse_factors(R, text, A=None) -> FactorizationDatum:
    pieces = text if isinstance(text, list) else [p for p in text.split(",") if p.strip()]
    factors = tuple(MonicPoly.parse(R, p, "x") for p in pieces)
    if A is None or A.poly is None:
        raise CapabilityError("--factors needs a monogenic algebra given by --poly")
    try:
        return FactorizationDatum(A.poly, factors)
    except ValueError as exc:
        raise ParseError(str(exc), text) from None


def datum_from_root(A, G, root) -> ClosureDatum:
    n = A.rank
    R = A.ring
    r = R.parse(str(root))
    if G == alternating(n):
        return an_closure_from_root(A, r)
    if n == 4 and G == dihedral4():
        return d4_construction(A, r).datum
    raise CapabilityError(f"--from-root applies to A{n} and D4 data, not {group_to_text(G)}")


def _text(x) -> str:
    return str(x)


def _roots(poly: MonicPoly) -> list | None:
    try:
        return sorted((str(r) for r in find_monic_roots(poly)))
    except CapabilityError:
        return None


# --- commands -------------------------------------------------------------------------------------

def _cmd_ferrand(ctx: _Context, notes) -> dict:
    phi = ClosureDatum.ferrand(ctx.algebra)
    return {"rows": [{"orbit": lab, "value": _text(v)} for lab, v in phi.rows()], "count": len(phi.values)}


def _cmd_disc_algebra(ctx: _Context, notes) -> dict:
    A = ctx.algebra
    D = discriminant_algebra(A)
    disc = D.discriminant
    out = {
        "quadratic": D.quadratic.format("y"),
        "trace": _text(D.trace),
        "norm": _text(D.norm),
        "discriminant": _text(disc),
        "disc_of_basis": _text(disc_of_basis(A)),
        "discriminants_agree": disc == disc_of_basis(A),
    }
    roots = _roots(D.quadratic)
    if roots is None:
        notes.append("roots of the quadratic were not searched for over this ring")
    else:
        out["roots"] = roots
        sq = _roots(MonicPoly(A.ring, (A.ring.zero, -disc)))
        if sq is not None:
            out["disc_square_roots"] = sq
        try:
            corr = sqrt_disc_correspondence(A, bound=ctx.opts.get("bound", PRIMOID_SEARCH_BOUND))
            out["root_to_square_root"] = [[_text(x), _text(d)] for x, d in corr.pairs]
        except HypothesisError as exc:
            notes.append(f"no root/square-root correspondence: {exc}")
    return out


def _cmd_resolvent(ctx: _Context, notes) -> dict:
    A = ctx.algebra
    if ctx.spec.args[:1] == ["cubic"]:
        if A.poly is None or A.rank != 4:
            raise CapabilityError("the cubic resolvent needs a monogenic quartic (--poly)")
        m = cubic_resolvent(A.poly)
        out = {"cubic": m.format("y")}
        roots = _roots(m)
        if roots is not None:
            out["roots"] = roots
            out["count"] = len(roots)
        return out
    if ctx.spec.args:
        raise ParseError(f"unknown resolvent variant {ctx.spec.args[0]!r}")
    G = ctx.group()
    res = resolvent_algebra(A, G)
    Q = res.quotient
    out = quotient_to_doc(Q)
    homs = res.homs()
    out["count"] = len(homs)
    out["homs"] = [[_text(arrays.lift(ctx.ring, x)) for x in h] for h in homs]
    return out


def _closure_summary(Q, notes, idempotents=True) -> dict:
    out = quotient_to_doc(Q, with_struct=False)
    try:
        f: FaithfulResult = is_faithful(Q)
        out["faithful"] = f.faithful
        out["faithful_description"] = f.description
        if f.kernel is not None:
            out["kernel"] = _text(f.kernel)
    except CapabilityError as exc:
        notes.append(f"faithfulness not decided: {exc}")
    if idempotents and Q.ring.enumerable:
        if Q.size() <= IDEMPOTENT_REPORT_LIMIT:
            prim = primitive_idempotents(Q)
            out["primitive_idempotents"] = len(prim)
            out["idempotents_decompose_one"] = check_orthogonal_decomposition(Q, prim)
        else:
            notes.append(f"idempotent search skipped: {Q.size()} elements exceed {IDEMPOTENT_REPORT_LIMIT}")
    return out


def _datum_result(phi: ClosureDatum) -> dict:
    return {"group": group_to_text(phi.group), "values": {lab: _text(v) for lab, v in phi.rows()},
            "verified": bool(verify_closure_datum(phi))}


def _cmd_enumerate(ctx: _Context, notes) -> dict:
    A = ctx.algebra
    G = ctx.group()
    if ctx.opts.get("closures"):
        check_closure_guard(A.rank, ctx.opts.get("guard_n"))
    data = closure_data(A, G)
    out = {"count": len(data), "data": [_datum_result(phi) for phi in data]}
    if ctx.opts.get("closures"):
        guard = ctx.opts.get("guard_n")
        for d, phi in zip(out["data"], data):
            d["closure"] = _closure_summary(closure_algebra(phi, guard_n=guard), notes)
    return out


def _cmd_verify(ctx: _Context, notes) -> dict:
    phi = ctx.datum()
    v = verify_closure_datum(phi)
    out = {"ok": v.ok, "group": group_to_text(phi.group)}
    if not v.ok:
        out.update({"law": v.law, "message": v.message})
        if v.where is not None:
            out["where"] = [str(w) for w in v.where]
    return out


def _cmd_closure_algebra(ctx: _Context, notes) -> dict:
    A = ctx.algebra
    guard = ctx.opts.get("guard_n")
    doc = ctx.spec.algebra or {}
    if "product" in doc and not ({"datum", "from_root", "factors"} & set(ctx.opts)):
        parts = [algebra_from_doc(ctx.ring, d) for d in doc["product"]]
        data = [ClosureDatum.ferrand(P) for P in parts]
        H = parse_group(ctx.spec.group, degree=A.rank) if ctx.spec.group else symmetric(A.rank)
        chk = stronger_product_check(data, H)
        out = _closure_summary(chk.closure, notes, idempotents=False)
        out.update({"induced_to": group_to_text(H), "expected_rank": chk.expected_rank, "index": chk.index,
                    "coset_idempotents": len(chk.idempotents), "idempotents_ok": chk.idempotents_ok,
                    "product_check_ok": chk.ok})
        notes.append("datum: product of Ferrand data on the factors, induced to the given group")
        return out
    # fail on the guard before building a datum on a large tensor power
    check_closure_guard(A.rank, guard)
    phi = ctx.datum()
    verify_closure_datum(phi, raise_on_failure=True)
    Q = closure_algebra(phi, guard_n=guard)
    out = {"datum": _datum_result(phi)}
    out.update(_closure_summary(Q, notes))
    return out


def _cmd_from_root(ctx: _Context, notes) -> dict:
    A = ctx.algebra
    if "from_root" not in ctx.opts:
        raise ParseError("from-root needs --from-root VALUE")
    G = ctx.group()
    out = {}
    if A.rank == 4 and G == dihedral4():
        con = d4_construction(A, A.ring.parse(str(ctx.opts["from_root"])))
        out["routes_compared"] = con.resolvent_route is not None
        out["routes_agree"] = con.routes_agree
        if con.resolvent_route is None:
            notes.append("the resolvent-algebra route needs linear algebra over the ring; only the symmetric route ran")
        phi = con.datum
    else:
        phi = datum_from_root(A, G, ctx.opts["from_root"])
    out.update(_datum_result(phi))
    out["document"] = datum_to_doc(phi)
    return out


def _cmd_factor_datum(ctx: _Context, notes) -> dict:
    A = ctx.algebra
    R = ctx.ring
    if "factors" in ctx.opts:
        fact = parse_factors(R, ctx.opts["factors"], A)
        phi = factorization_closure(A, fact)
        back = factors_from_datum(phi, fact.sizes)
        out = _datum_result(phi)
        out.update({"factors": [g.format("x") for g in fact.factors],
                    "round_trip": list(back.factors) == list(fact.factors)})
        return out
    G = ctx.group()
    sizes = _young_sizes(G, A.rank)
    if A.poly is None:
        raise CapabilityError("factorization data need a monogenic algebra given by --poly")
    facts = monic_factorizations(A.poly, sizes)
    rows = []
    for fs in facts:
        fact = FactorizationDatum(A.poly, fs)
        phi = factorization_closure(A, fact)
        back = factors_from_datum(phi, sizes)
        row = {"factors": [g.format("x") for g in fs], "round_trip": back == fact}
        row.update(_datum_result(phi))
        if ctx.opts.get("closures"):
            row["closure"] = _closure_summary(closure_algebra(phi, guard_n=ctx.opts.get("guard_n")), notes,
                                              idempotents=False)
        rows.append(row)
    return {"sizes": sizes, "count": len(rows), "factorizations": rows}


def _young_sizes(G, n) -> list:
    name = group_to_text(G)
    parts = name.split("x")
    try:
        sizes = [int(p[1:]) for p in parts if p.startswith("S")]
    except ValueError:
        sizes = []
    if len(sizes) != len(parts) or sum(sizes) != n or young(sizes) != G:
        raise CapabilityError(f"{name} is not a product of symmetric groups on consecutive blocks")
    return sizes


def _cmd_primoid(ctx: _Context, notes) -> dict:
    R = ctx.ring
    p = R.parse(str(ctx.opts.get("element", "2")))
    bound = ctx.opts.get("bound")
    res = is_primoid(p, bound=bound)
    out = {"element": _text(p), "primoid": res.is_primoid}
    if res.bounded:
        notes.append(f"no witness with coefficients up to {bound}; primoid only up to that bound")
    if res.witness:
        a, b = res.witness
        out["witness"] = [_text(a), _text(b)]
        out["product"] = _text(a * b)
    if bound is not None:
        out["bound"] = bound
    return out


def _cmd_properties(ctx: _Context, notes) -> dict:
    from .properties import run_properties

    seed = int(ctx.opts.get("seed", 0))
    cases = int(ctx.opts.get("cases", 200))
    names = ctx.spec.args or None
    results = run_properties(seed=seed, cases=cases, names=names)
    return {"seed": seed, "cases": cases,
            "properties": {r.name: {"cases": r.cases, "failures": r.failures, "ok": r.ok,
                                    "first_failure": r.first_failure} for r in results},
            "ok": all(r.ok for r in results)}


_DISPATCH = {
    "ferrand": _cmd_ferrand,
    "disc-algebra": _cmd_disc_algebra,
    "resolvent": _cmd_resolvent,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "closure-algebra": _cmd_closure_algebra,
    "from-root": _cmd_from_root,
    "factor-datum": _cmd_factor_datum,
    "primoid": _cmd_primoid,
    "properties": _cmd_properties,
}


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ConsistencyError):
        return EXIT_CONSISTENCY
    if isinstance(exc, CapabilityError):
        return EXIT_CAPABILITY
    if isinstance(exc, (ParseError, HomomorphismError, DimensionError, NotAClosureDatum, NotInvariantError,
                        ValueError, ClosureError)):
        return EXIT_PARSE
    raise exc


def run(spec: JobSpec) -> Report:
    """Run one job and return its report; errors become an ``error`` entry and an exit code."""
    notes: list = []
    t0 = time.perf_counter()
    report = Report(format=REPORT_FORMAT, version=VERSION, command=spec.command)
    inputs = spec.to_dict()
    inputs.pop("expect", None)
    report["inputs"] = inputs
    try:
        if spec.command == "suite":
            raise ParseError("suite jobs cannot be nested")
        results = _DISPATCH[spec.command](_Context(spec), notes)
        report["results"] = results
        report["exit"] = EXIT_OK
    except (ClosureError, ValueError) as exc:
        code = exit_code_for(exc)
        err = {"type": type(exc).__name__, "message": str(exc)}
        limit = getattr(exc, "limit", None)
        if limit is not None:
            err["limit"] = limit
        pos = getattr(exc, "position", None)
        if pos is not None:
            err["position"] = pos
        report["results"] = {"error": err}
        report["exit"] = code
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 4)}
    report["notes"] = notes
    return report


# --- suites ---------------------------------------------------------------------------------------

def load_corpus(path: str) -> list:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.doc, exc.pos) from None
    except OSError as exc:
        raise ParseError(f"cannot read corpus {path}: {exc.strerror}") from None
    jobs = doc.get("jobs", []) if isinstance(doc, dict) else doc
    specs = [JobSpec.from_dict(j) for j in jobs]
    for k, s in enumerate(specs):
        if s.id is None:
            s.id = f"job{k:03d}"
    ids = [s.id for s in specs]
    if len(set(ids)) != len(ids):
        raise ParseError("job ids in a corpus must be unique")
    return specs


def lookup(results, path: str):
    """Follow a dotted path like ``data.0.verified`` into a results dictionary."""
    cur = results
    for key in path.split("."):
        if isinstance(cur, list):
            try:
                cur = cur[int(key)]
            except (ValueError, IndexError):
                return _MISSING
        elif isinstance(cur, dict) and key in cur:
            cur = cur[key]
        else:
            return _MISSING
    return cur


class _Missing:
    def __repr__(self):
        return "<missing>"


_MISSING = _Missing()


def compare(spec: JobSpec, report: Report) -> list:
    """Mismatches between a job's expectations and its report."""
    out = []
    for key, want in spec.expect.items():
        if key == "exit":
            got = report.exit_code
        else:
            got = lookup(report.get("results", {}), key)
        if got is _MISSING or json.loads(json.dumps(got)) != want:
            out.append({"id": spec.id, "key": key, "expected": want,
                        "actual": None if got is _MISSING else got})
    return out


def _run_job(d: dict) -> dict:
    return dict(run(JobSpec.from_dict(d)))


def run_suite(specs, jobs: int = 1) -> Report:
    """Run jobs (in parallel when ``jobs > 1``) and check them against their expectations."""
    t0 = time.perf_counter()
    specs = list(specs)
    payload = [s.to_dict() for s in specs]
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_job, payload))
    else:
        reports = [_run_job(d) for d in payload]
    rows = []
    mismatches = []
    for spec, rep in sorted(zip(specs, reports), key=lambda p: p[0].id):
        rep = Report(rep)
        bad = compare(spec, rep)
        mismatches.extend(bad)
        rows.append({"id": spec.id, "command": spec.command, "status": "fail" if bad else "pass",
                     "exit": rep.exit_code, "seconds": rep["timing"]["seconds"]})
    report = Report(format=REPORT_FORMAT, version=VERSION, command="suite",
                    inputs={"jobs": jobs, "count": len(specs)})
    report["results"] = {"total": len(rows), "passed": sum(r["status"] == "pass" for r in rows),
                         "failed": sum(r["status"] == "fail" for r in rows), "jobs": rows,
                         "mismatches": mismatches}
    report["exit"] = EXIT_MISMATCH if mismatches else EXIT_OK
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 4)}
    report["notes"] = []
    return report


# --- rendering ------------------------------------------------------------------------------------

def render_text(report: dict) -> str:
    lines = [f"gclosure {report['command']}"]
    inputs = report.get("inputs", {})
    for key in ("ring", "algebra", "group", "args", "options"):
        if key in inputs:
            val = inputs[key]
            if key == "options" and "datum" in val:
                val = dict(val, datum=f"<document with {len(val['datum'].get('values', {}))} values>")
            lines.append(f"  {key}: {val if isinstance(val, str) else json.dumps(val)}")
    results = report.get("results", {})
    if "error" in results:
        err = results["error"]
        lines.append(f"error ({err['type']}): {err['message']}")
        for key in ("limit", "position"):
            if key in err:
                lines.append(f"  {key}: {err[key]}")
        lines.append(f"exit status {report.get('exit')}")
    elif report["command"] == "suite":
        for row in results["jobs"]:
            lines.append(f"{row['status'].upper():4} {row['id']} ({row['command']}, exit {row['exit']}, "
                         f"{row['seconds']} s)")
        for bad in results["mismatches"]:
            lines.append(f"mismatch in {bad['id']}: {bad['key']} expected {json.dumps(bad['expected'])}, "
                         f"got {json.dumps(bad['actual'])}")
        lines.append(f"{results['passed']} passed, {results['failed']} failed of {results['total']}")
    else:
        _render_value(results, lines, 0)
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    lines.append(f"time: {report.get('timing', {}).get('seconds', 0)} s")
    return "\n".join(lines)


def _render_value(val, lines, depth, key=None):
    pad = "  " * depth
    head = f"{pad}{key}:" if key is not None else None
    if isinstance(val, dict):
        if head:
            lines.append(head)
        sub = depth + 1 if head else depth
        for k, v in val.items():
            _render_value(v, lines, sub, k)
    elif isinstance(val, list) and any(isinstance(v, (dict, list)) for v in val):
        if head:
            lines.append(head)
        for i, v in enumerate(val):
            _render_value(v, lines, depth + 1, f"[{i}]")
    else:
        if isinstance(val, list):
            shown = ", ".join(_scalar(v) for v in val) if val else "(none)"
        else:
            shown = _scalar(val)
        lines.append(f"{head} {shown}" if head else f"{pad}{shown}")


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


# --- argument parsing ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gclosure", description="Closure data and closure algebras of rank-n algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("args", nargs="*", help="extra arguments (e.g. 'cubic' for resolvent, the corpus for suite)")
    p.add_argument("--ring", help="base ring, e.g. GF(7), Z/9, Z[a,b], Z[u]/(u^2-5)")
    p.add_argument("--poly", help="monic polynomial in x; the algebra is R[x]/(poly)")
    p.add_argument("--algebra-file", help="algebra document (JSON file, or inline JSON starting with '{')")
    p.add_argument("--group", help="S4, A3, D4, C4, V4, S2xS2, 1 or cycle generators like [(1,2)(3,4)]")
    p.add_argument("--datum-file", help="closure datum document (JSON)")
    p.add_argument("--from-root", help="root of the discriminant quadratic (A_n) or cubic resolvent (D4)")
    p.add_argument("--factors", help="comma-separated monic factors of the polynomial")
    p.add_argument("--guard-n", type=int, help="largest tensor power n allowed for closure algebras")
    p.add_argument("--closures", action="store_true", help="also compute closure algebras of enumerated data")
    p.add_argument("--element", help="ring element for primoid (default 2)")
    p.add_argument("--bound", type=int, help="coefficient bound for primoid searches in infinite rings")
    p.add_argument("--seed", type=int, default=0, help="random seed for properties")
    p.add_argument("--cases", type=int, default=200, help="random cases per property")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for suite runs")
    return p


def _read_json(arg: str):
    text = arg
    if not arg.lstrip().startswith(("{", "[")):
        try:
            with open(arg) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {arg}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{arg}: {exc.msg}", exc.doc, exc.pos) from None


def spec_from_args(ns) -> JobSpec:
    algebra = None
    if ns.poly and ns.algebra_file:
        raise ParseError("give either --poly or --algebra-file, not both")
    if ns.poly:
        algebra = {"poly": ns.poly}
    elif ns.algebra_file:
        algebra = _read_json(ns.algebra_file)
    opts = {}
    if ns.datum_file:
        doc = _read_json(ns.datum_file)
        opts["datum"] = doc.get("datum", doc) if isinstance(doc, dict) else doc
    for name in ("from_root", "factors", "guard_n", "element", "bound"):
        val = getattr(ns, name)
        if val is not None:
            opts[name] = val
    if ns.closures:
        opts["closures"] = True
    if ns.command == "properties":
        opts["seed"] = ns.seed
        opts["cases"] = ns.cases
    return JobSpec(command=ns.command, ring=ns.ring, algebra=algebra, group=ns.group, args=list(ns.args),
                   options=opts)


def emit(report: dict, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "machine":
        out.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
    else:
        out.write(render_text(report) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_intermixed_args(argv)
    try:
        if ns.command == "suite":
            if len(ns.args) != 1:
                raise ParseError("suite needs exactly one corpus file")
            report = run_suite(load_corpus(ns.args[0]), jobs=max(1, ns.jobs))
        else:
            report = run(spec_from_args(ns))
    except ParseError as exc:
        report = Report(format=REPORT_FORMAT, version=VERSION, command=ns.command, inputs={},
                        results={"error": {"type": "ParseError", "message": str(exc)}}, exit=EXIT_PARSE,
                        timing={"seconds": 0.0}, notes=[])
    emit(report, ns.format)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
