"""The ten acceptance criteria, each timed against its runtime budget.

Every test appends one ``criterion N: PASS/FAIL`` line to the acceptance log,
which is printed in the terminal summary.
"""

import time
from contextlib import contextmanager

from gclosure.algebra import MonicPoly, disc_of_basis, make_monogenic, trivial_algebra
from gclosure.catalog import (FactorizationDatum, an_closure_from_root, cubic_resolvent, d4_construction,
                              discriminant_algebra, factorization_closure, factors_from_datum,
                              monic_factorizations, stronger_product_check)
from gclosure.cli import JobSpec, run
from gclosure.closure import ClosureDatum, closure_algebra, enumerate_closure_data, verify_closure_datum
from gclosure.groups import alternating, dihedral4, symmetric, trivial, young
from gclosure.properties import run_properties
from gclosure.quotient import check_orthogonal_decomposition, is_faithful, primitive_idempotents
from gclosure.rings import GF, IntegersMod, parse_ring
from gclosure.roots import find_monic_roots, is_primoid


def mono(R, text):
    return make_monogenic(R, MonicPoly.parse(R, text))


@contextmanager
def criterion(log, number, title, budget):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"criterion {number}: FAIL  {title} ({type(exc).__name__}: {exc})"
        log.append(line)
        print(line)
        raise
    elapsed = time.perf_counter() - t0
    ok = elapsed < budget
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} ({elapsed:.2f} s, budget {budget} s)"
    log.append(line)
    print(line)
    assert ok, f"took {elapsed:.2f} s, budget {budget} s"


def test_criterion_01_symbolic_cubic_discriminant_algebra(acceptance_log):
    with criterion(acceptance_log, 1, "symbolic cubic discriminant algebra", 1):
        R = parse_ring("Z[a,b]")
        A = mono(R, "x^3 + a*x + b")
        D = discriminant_algebra(A)
        assert D.quadratic.format("y") == "y^2 - 3*b*y + (a^3 + 9*b^2)"
        assert D.discriminant == R.parse("-4*a^3 - 27*b^2") == disc_of_basis(A)


def test_criterion_02_f8_has_two_a3_data(acceptance_log):
    with criterion(acceptance_log, 2, "F8/F2 has two A3 data with rank-3 closures", 1):
        A = mono(GF(2), "x^3 + x + 1")
        q = discriminant_algebra(A).quadratic
        assert q == MonicPoly.parse(GF(2), "y^2 + y", var="y")
        assert {int(r.v) for r in find_monic_roots(q)} == {0, 1}
        data = enumerate_closure_data(A, alternating(3))
        assert len(data) == 2
        for phi in data:
            assert verify_closure_datum(phi)
            assert closure_algebra(phi).rank == 3


def test_criterion_03_f4_has_no_trivial_data(acceptance_log):
    with criterion(acceptance_log, 3, "F4/F2 has no trivial-group data though disc = 1", 1):
        R = GF(2)
        A = mono(R, "x^2 + x + 1")
        assert enumerate_closure_data(A, trivial(2)) == []
        disc = disc_of_basis(A)
        assert disc == R.one and R.one * R.one == disc


def test_criterion_04_d4_over_gf7(acceptance_log):
    with criterion(acceptance_log, 4, "D4 over GF(7) for x^4 + 1", 30):
        R = GF(7)
        A = mono(R, "x^4 + 1")
        m = cubic_resolvent(A.poly)
        assert m == MonicPoly.parse(R, "y^3 - 4*y", var="y")
        roots = sorted(int(r.v) for r in find_monic_roots(m))
        assert roots == [0, 2, 5]
        built = []
        for rho in roots:
            c = d4_construction(A, rho)
            assert c.resolvent_route is not None and c.routes_agree
            built.append(c.datum)
        assert len(set(built)) == 3
        # exhaustive search for maps out of the rank-3 resolvent algebra
        searched = enumerate_closure_data(A, dihedral4())
        assert set(searched) == set(built)
        for phi in built:
            assert closure_algebra(phi).rank == 8 == dihedral4().order


def test_criterion_05_non_faithful_closure_over_z9(acceptance_log):
    with criterion(acceptance_log, 5, "Z/9 x^3 A3 datum from 6 has a non-faithful closure", 5):
        rep = run(JobSpec(command="closure-algebra", ring="Z/9", algebra={"poly": "x^3"}, group="A3",
                          options={"from_root": "6"}))
        assert rep.exit_code == 0
        assert rep["results"]["faithful"] is False and rep["results"]["kernel"] == "3"
        A = mono(IntegersMod(9), "x^3")
        phi = an_closure_from_root(A, 6)
        f = is_faithful(closure_algebra(phi))
        assert not f.faithful and str(f.kernel) == "3"


def test_criterion_06_trivial_etale_algebra(acceptance_log):
    with criterion(acceptance_log, 6, "GF(5)^3 with A3: two data, split rank-3 closures", 5):
        R = GF(5)
        A = trivial_algebra(R, 3)
        data = enumerate_closure_data(A, alternating(3))
        assert len(data) == 2
        for phi in data:
            Q = closure_algebra(phi)
            assert Q.rank == 3
            prim = primitive_idempotents(Q)
            assert len(prim) == 3 and check_orthogonal_decomposition(Q, prim)


def test_criterion_07_factorization_data(acceptance_log):
    with criterion(acceptance_log, 7, "GF(5) x^4 - 1 with S2xS2: six data from factorizations", 60):
        R = GF(5)
        A = mono(R, "x^4 - 1")
        G = young([2, 2])
        data = enumerate_closure_data(A, G)
        assert len(data) == 6
        facts = monic_factorizations(A.poly, [2, 2])
        assert len(facts) == 6
        from_facts = set()
        for factors in facts:
            fd = FactorizationDatum(A.poly, factors)
            phi = factorization_closure(A, fd)
            assert factors_from_datum(phi, [2, 2]) == fd
            from_facts.add(phi)
        assert from_facts == set(data)
        for phi in data:
            assert closure_algebra(phi).rank == 4


def test_criterion_08_stronger_products(acceptance_log):
    with criterion(acceptance_log, 8, "GF(3) x GF(3) induced to S2: rank 2, two idempotents", 1):
        R = GF(3)
        one = ClosureDatum.ferrand(trivial_algebra(R, 1))
        res = stronger_product_check([one, one], symmetric(2))
        assert res.index == 2 and res.rank == 2 == res.expected_rank
        assert len(res.idempotents) == 2 and res.idempotents_ok


def test_criterion_09_golden_ratio_obstruction(acceptance_log):
    with criterion(acceptance_log, 9, "Z[u]/(u^2-5): disc 5 is a square, no data, 2 not primoid", 1):
        R = parse_ring("Z[u]/(u^2-5)")
        A = mono(R, "x^2 - x - 1")
        u = R.gen
        disc = discriminant_algebra(A).discriminant
        assert disc == R(5) and u * u == disc
        rep = run(JobSpec(command="enumerate", ring=str(R), algebra={"poly": "x^2-x-1"}, group="1"))
        assert rep.exit_code == 0 and rep["results"]["count"] == 0
        res = is_primoid(R(2), bound=2)
        assert not res.is_primoid
        a, b = res.witness
        assert {str(a), str(b)} == {"u + 1", "-u + 1"} and a * b == R(-4)


def test_criterion_10_property_suites(acceptance_log):
    with criterion(acceptance_log, 10, "eight property suites, 200 cases each", 600):
        results = run_properties(seed=0, cases=200)
        assert len(results) == 8
        for r in results:
            assert r.cases >= 200 and r.ok, f"{r.name}: {r.first_failure}"
