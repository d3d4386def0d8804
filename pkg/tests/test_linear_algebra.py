import itertools
import math

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from gclosure.groups import sign
from gclosure.matrices import Matrix, adjugate, charpoly_coeffs, determinant
from gclosure.normal_forms import QuotientModule, mulmod, normal_form, right_kernel, smith_invariants
from gclosure.rings import GF, ZZ, IntegersMod, parse_ring


def leibniz(rows, R):
    n = len(rows)
    total = R.zero
    for s in itertools.permutations(range(n)):
        term = R(sign(s))
        for i in range(n):
            term = term * rows[i][s[i]]
        total = total + term
    return total


def small_matrices(n_max=4, lo=-4, hi=4):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


@given(small_matrices())
def test_determinant_matches_leibniz_over_z(rows):
    M = [[ZZ(x) for x in r] for r in rows]
    assert determinant(M, ZZ) == leibniz(M, ZZ)


def test_determinant_over_polynomial_ring():
    R = parse_ring("Z[a,b]")
    a, b = R.var(0), R.var(1)
    M = [[a, b, R.one], [R.one, a, b], [b, R.one, a]]
    assert determinant(M, R) == leibniz(M, R)


@given(small_matrices(), st.sampled_from([4, 9, 7]))
def test_charpoly_evaluates_to_det_of_shifted_matrix(rows, m):
    R = IntegersMod(m)
    n = len(rows)
    M = [[R(x) for x in r] for r in rows]
    c = charpoly_coeffs(M, R)  # det(tI - M) = t^n + c1 t^(n-1) + ... + cn
    for t in range(m):
        shifted = [[R(t if i == j else 0) - M[i][j] for j in range(n)] for i in range(n)]
        val = sum((c[k] * R(t) ** (n - k) for k in range(n + 1)), R.zero)
        assert val == leibniz(shifted, R)


@given(small_matrices())
def test_adjugate_identity(rows):
    n = len(rows)
    M = [[ZZ(x) for x in r] for r in rows]
    adj = adjugate(M, ZZ)
    d = determinant(M, ZZ)
    prod = Matrix(ZZ, M) * Matrix(ZZ, adj)
    assert prod.rows == [[d if i == j else ZZ.zero for j in range(n)] for i in range(n)]


def determinantal_divisors(rows):
    """Invariant factors from gcds of k x k minors."""
    nr, nc = len(rows), len(rows[0])
    ds = [1]
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for I in itertools.combinations(range(nr), k):
            for J in itertools.combinations(range(nc), k):
                sub = [[ZZ(rows[i][j]) for j in J] for i in I]
                g = math.gcd(g, leibniz(sub, ZZ).v)
        if g == 0:
            break
        ds.append(g)
    return [ds[k] // ds[k - 1] for k in range(1, len(ds))]


@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_smith_invariants_match_minors(nr, nc, data):
    rows = data.draw(st.lists(st.lists(st.integers(-6, 6), min_size=nc, max_size=nc), min_size=nr, max_size=nr))
    M = [[ZZ(x) for x in r] for r in rows]
    got = [d for d in smith_invariants(M, ZZ) if d != 0]
    assert [abs(d) for d in got] == determinantal_divisors(rows)


def brute_span(rows, m, dim):
    span = {tuple([0] * dim)}
    for r in rows:
        new = set()
        for v in span:
            for k in range(m):
                new.add(tuple((v[i] + k * r[i]) % m for i in range(dim)))
        span = new
    return span


@given(st.sampled_from([4, 6, 8, 9]), st.integers(1, 3), st.integers(0, 3), st.data())
def test_quotient_module_over_zm_matches_brute_force(m, dim, nrel, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, m - 1), min_size=dim, max_size=dim),
                              min_size=nrel, max_size=nrel))
    R = IntegersMod(m)
    Q = QuotientModule.from_relations(R, [[R(x) for x in r] for r in rows], dim)
    span = brute_span(rows, m, dim)
    assert Q.size() == m ** dim // len(span)
    vecs = list(itertools.product(range(m), repeat=dim))
    red = Q.reduce(np.array(vecs, dtype=np.int64))
    # two vectors reduce to the same coordinates exactly when they differ by the span
    classes = {}
    for v, z in zip(vecs, map(tuple, red)):
        classes.setdefault(z, []).append(v)
    assert len(classes) == Q.size()
    for members in classes.values():
        base = members[0]
        for v in members:
            assert tuple((v[i] - base[i]) % m for i in range(dim)) in span


def test_quotient_module_over_z_has_expected_torsion():
    R = ZZ
    Q = QuotientModule.from_relations(R, [[R(2), R(4)], [R(0), R(6)]], 2)
    assert sorted(Q.orders) == [2, 6]


@given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 40), st.sampled_from([2, 3, 7, 101, 65521]))
def test_mulmod_matches_exact_product(a, b, c, p):
    rng = np.random.default_rng(a * 1000 + b * 10 + c)
    X = rng.integers(0, p, size=(a, c), dtype=np.int64)
    Y = rng.integers(0, p, size=(c, b), dtype=np.int64)
    exact = (X.astype(object) @ Y.astype(object)) % p
    assert (mulmod(X, Y, p) == exact.astype(np.int64)).all()


def test_rref_and_kernel_over_prime_field():
    F = GF(5)
    M = [[F(1), F(2), F(3)], [F(2), F(4), F(2)]]
    nf = normal_form(M, F)
    assert nf.rank == 2
    K = right_kernel(M, F)
    assert K.shape == (1, 3)
    prod = (np.array([[x.v for x in r] for r in M]) @ K[0]) % 5
    assert not prod.any()
