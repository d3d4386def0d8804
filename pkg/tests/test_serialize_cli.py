"""Documents, job specs, the command-line interface and the suite runner."""

import json
from pathlib import Path

import pytest

from gclosure.algebra import MonicPoly, make_monogenic, make_product, trivial_algebra
from gclosure.cli import JobSpec, load_corpus, lookup, main, run, run_suite
from gclosure.closure import ClosureDatum, enumerate_closure_data
from gclosure.errors import ParseError
from gclosure.groups import alternating, dihedral4
from gclosure.rings import GF, IntegersMod, parse_ring
from gclosure.serialize import algebra_from_doc, algebra_to_doc, datum_from_doc, datum_to_doc


def mono(R, text):
    return make_monogenic(R, MonicPoly.parse(R, text))


def machine(capsys, argv):
    code = main(argv + ["--format", "machine"])
    report = json.loads(capsys.readouterr().out)
    assert report["exit"] == code
    return report


# --- documents ------------------------------------------------------------------------------------

@pytest.mark.parametrize("ring, group, poly", [(GF(7), dihedral4(), "x^4+1"), (IntegersMod(9), alternating(3), "x^3")])
def test_datum_document_round_trip(ring, group, poly):
    A = mono(ring, poly)
    for phi in enumerate_closure_data(A, group):
        doc = json.loads(json.dumps(datum_to_doc(phi)))
        assert datum_from_doc(doc) == phi


def test_datum_document_accepts_any_orbit_member():
    A = trivial_algebra(GF(5), 3)
    phi = enumerate_closure_data(A, alternating(3))[0]
    doc = datum_to_doc(phi)
    doc["values"]["(2,3,1)"] = doc["values"].pop("(1,2,3)")
    assert datum_from_doc(doc) == phi
    doc["values"]["(3,1,2)"] = "0" if doc["values"]["(2,3,1)"] != "0" else "1"
    with pytest.raises(ParseError):
        datum_from_doc(doc)


def test_datum_document_needs_every_orbit():
    phi = ClosureDatum.ferrand(trivial_algebra(GF(3), 2))
    doc = datum_to_doc(phi)
    doc["values"].pop("(1,2)")
    with pytest.raises(ParseError):
        datum_from_doc(doc)


def test_algebra_documents_round_trip():
    R = parse_ring("Z[a,b]")
    for A in (mono(R, "x^3 + a*x + b"), make_product(mono(GF(5), "x^2+2"), trivial_algebra(GF(5), 1))[0],
              trivial_algebra(GF(3), 2)):
        doc = json.loads(json.dumps(algebra_to_doc(A)))
        B = algebra_from_doc(A.ring, doc)
        assert B.rank == A.rank and (B.struct == A.struct).all() and (B.unit == A.unit).all()


def test_job_spec_round_trip():
    d = {"id": "x", "command": "enumerate", "ring": "GF(7)", "algebra": {"poly": "x^4+1"}, "group": "D4",
         "options": {"closures": True}, "expect": {"count": 3}}
    assert JobSpec.from_dict(d).to_dict() == d
    with pytest.raises(ParseError):
        JobSpec.from_dict({"command": "nonsense"})


# --- commands -------------------------------------------------------------------------------------

def test_ferrand_command(capsys):
    rep = machine(capsys, ["ferrand", "--ring", "Z[s,t]", "--poly", "x^2 - s*x + t"])
    assert rep["results"]["rows"] == [{"orbit": "(1,1)", "value": "1"}, {"orbit": "(1,2)", "value": "s"},
                                      {"orbit": "(2,2)", "value": "t"}]


def test_disc_algebra_command(capsys):
    rep = machine(capsys, ["disc-algebra", "--ring", "Z[a,b]", "--poly", "x^3 + a*x + b"])
    res = rep["results"]
    assert res["quadratic"] == "y^2 - 3*b*y + (a^3 + 9*b^2)"
    assert res["discriminant"] == "-4*a^3 - 27*b^2" and res["discriminants_agree"] is True


def test_enumerate_d4_command(capsys):
    rep = machine(capsys, ["enumerate", "--ring", "GF(7)", "--poly", "x^4+1", "--group", "D4"])
    assert rep["exit"] == 0 and rep["results"]["count"] == 3
    assert all(d["verified"] for d in rep["results"]["data"])


def test_from_root_then_verify_and_closure(capsys, tmp_path):
    rep = machine(capsys, ["from-root", "--ring", "Z/9", "--poly", "x^3", "--group", "A3", "--from-root", "3"])
    assert rep["results"]["verified"] is True
    path = tmp_path / "datum.json"
    path.write_text(json.dumps(rep["results"]["document"]))
    ver = machine(capsys, ["verify", "--ring", "Z/9", "--poly", "x^3", "--datum-file", str(path)])
    assert ver["results"]["ok"] is True
    clo = machine(capsys, ["closure-algebra", "--ring", "Z/9", "--poly", "x^3", "--datum-file", str(path)])
    assert clo["results"]["faithful"] is False and clo["results"]["kernel"] == "3"


def test_failed_verification_exits_zero(capsys, tmp_path):
    rep = machine(capsys, ["from-root", "--ring", "GF(7)", "--poly", "x^4+1", "--group", "D4", "--from-root", "2"])
    doc = rep["results"]["document"]
    label = next(k for k in doc["values"] if k != "(1,1,1,1)")
    doc["values"][label] = str((int(doc["values"][label]) + 1) % 7)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    ver = machine(capsys, ["verify", "--ring", "GF(7)", "--poly", "x^4+1", "--datum-file", str(path)])
    assert ver["exit"] == 0 and ver["results"]["ok"] is False and ver["results"]["law"]


def test_text_output_mentions_kernel(capsys):
    code = main(["from-root", "--ring", "Z/9", "--poly", "x^3", "--group", "A3", "--from-root", "3"])
    assert code == 0
    capsys.readouterr()
    main(["closure-algebra", "--ring", "Z/9", "--poly", "x^3", "--group", "A3", "--from-root", "3"])
    out = capsys.readouterr().out
    assert "kernel" in out and "3" in out


def test_machine_output_is_deterministic(capsys):
    argv = ["enumerate", "--ring", "GF(5)", "--poly", "x^3-x", "--group", "A3", "--closures"]
    a, b = machine(capsys, argv), machine(capsys, argv)
    a.pop("timing"), b.pop("timing")
    assert json.dumps(a) == json.dumps(b)


@pytest.mark.parametrize("argv, code", [
    (["enumerate", "--ring", "GF(6)", "--poly", "x^2", "--group", "1"], 2),
    (["from-root", "--ring", "GF(7)", "--poly", "x^4+1", "--group", "D4", "--from-root", "1"], 2),
    (["closure-algebra", "--ring", "GF(2)", "--poly", "x^5+x^2+1", "--group", "S5"], 3),
    (["closure-algebra", "--ring", "GF(7)", "--poly", "x^4+1", "--group", "D4", "--from-root", "2",
      "--guard-n", "3"], 3),
    (["disc-algebra", "--ring", "Z[u]/(u^2-5)", "--poly", "x^2-x-1"], 0),
    (["enumerate", "--ring", "Z[u]/(u^2-5)", "--poly", "x^2-x-1", "--group", "1"], 0),
    (["from-root", "--ring", "Z[a,b]", "--poly", "x^4+a*x+b", "--group", "C4", "--from-root", "a"], 3),
    (["verify", "--ring", "GF(7)", "--poly", "x^2+1", "--datum-file", "/nonexistent.json"], 2),
])
def test_exit_codes(capsys, argv, code):
    rep = machine(capsys, argv)
    assert rep["exit"] == code
    if code:
        assert rep["results"]["error"]["message"]


def test_guard_error_names_the_limit(capsys):
    rep = machine(capsys, ["closure-algebra", "--ring", "GF(2)", "--poly", "x^5+x^2+1", "--group", "S5"])
    assert rep["results"]["error"]["limit"] == 4


def test_primoid_command(capsys):
    rep = machine(capsys, ["primoid", "--ring", "Z[u]/(u^2-5)", "--element", "2", "--bound", "2"])
    res = rep["results"]
    assert res["primoid"] is False and res["product"] == "-4"


# --- suites ---------------------------------------------------------------------------------------

def test_run_report_carries_inputs():
    spec = JobSpec(command="enumerate", ring="GF(3)", algebra={"poly": "x^2+1"}, group="1")
    rep = run(spec)
    assert rep["inputs"]["ring"] == "GF(3)" and rep.exit_code == 0
    assert lookup(rep["results"], "count") == 0


def _corpus(tmp_path, jobs):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps({"format": "gclosure-corpus", "version": 1, "jobs": jobs}))
    return str(path)


def test_suite_reports_exactly_the_wrong_expectation(capsys, tmp_path):
    jobs = [
        {"id": "a", "command": "enumerate", "ring": "GF(7)", "algebra": {"poly": "x^4+1"}, "group": "D4",
         "expect": {"count": 3, "data.0.verified": True}},
        {"id": "b", "command": "enumerate", "ring": "GF(3)", "algebra": {"poly": "x^2+1"}, "group": "1",
         "expect": {"count": 5}},
        {"id": "c", "command": "disc-algebra", "ring": "GF(7)", "algebra": {"poly": "x^3-x"},
         "expect": {"exit": 0}},
    ]
    rep = machine(capsys, ["suite", _corpus(tmp_path, jobs), "--jobs", "2"])
    assert rep["exit"] == 5
    assert rep["results"]["mismatches"] == [{"id": "b", "key": "count", "expected": 5, "actual": 0}]
    assert [j["status"] for j in rep["results"]["jobs"]] == ["pass", "fail", "pass"]


def test_empty_suite_succeeds(capsys, tmp_path):
    rep = machine(capsys, ["suite", _corpus(tmp_path, [])])
    assert rep["exit"] == 0 and rep["results"]["total"] == 0


def test_suite_ids_default_and_parallel_matches_serial(tmp_path):
    jobs = [{"command": "ferrand", "ring": "GF(5)", "algebra": {"poly": p}} for p in ("x^2+1", "x^3+x+1", "x^2")]
    specs = load_corpus(_corpus(tmp_path, jobs))
    assert [s.id for s in specs] == ["job000", "job001", "job002"]
    serial = run_suite(specs, jobs=1)
    parallel = run_suite(specs, jobs=3)
    assert serial["results"]["jobs"][0]["id"] == "job000"
    assert [(j["id"], j["status"]) for j in serial["results"]["jobs"]] == \
        [(j["id"], j["status"]) for j in parallel["results"]["jobs"]]


def test_shipped_corpus_passes():
    path = Path(__file__).resolve().parents[1] / "corpus" / "worked_examples.json"
    rep = run_suite(load_corpus(str(path)), jobs=4)
    assert rep["results"]["mismatches"] == []
    assert rep["exit"] == 0 and rep["results"]["passed"] == rep["results"]["total"] > 0
