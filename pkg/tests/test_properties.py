"""Randomized invariants, driven by hypothesis-chosen seeds."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gclosure.algebra import char_poly
from gclosure.properties import (PROPERTIES, change_basis, random_algebra, random_ring, random_unimodular,
                                 run_property)


@pytest.mark.parametrize("name", sorted(PROPERTIES))
@given(seed=st.integers(0, 2**32))
def test_property_holds(name, seed):
    PROPERTIES[name](random.Random(seed))


@given(seed=st.integers(0, 2**32))
def test_change_basis_preserves_the_algebra(seed):
    # the structure constants change but the char poly of each new basis vector is that of its expression
    rng = random.Random(seed)
    R = random_ring(rng)
    A = random_algebra(R, 3, rng)
    P = random_unimodular(3, rng)
    B = change_basis(A, P)
    for i in range(3):
        a = sum((A.basis(j) * R(P[i][j]) for j in range(3)), A.zero)
        assert char_poly(B.basis(i)) == char_poly(a)


def test_run_property_counts_cases():
    res = run_property("norm", seed=3, cases=5)
    assert res.ok and res.cases == 5 and res.failures == 0
