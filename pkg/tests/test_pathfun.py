from itertools import combinations_with_replacement

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmtlab.errors import ValidationError
from rmtlab.rng import RngStream
from rmtlab.pathfun import (
    brute_force_omega,
    gamma,
    gamma_top_sum,
    odot,
    omega_1,
    omega_k,
    otimes,
    sample_bm_bundle,
)

S = RngStream(99)
T5 = np.linspace(0, 1, 6)


def naive_omega_1(b):
    n, points = b.shape
    best = -np.inf
    for cut in combinations_with_replacement(range(points), n - 1):
        s = (0, *cut, points - 1)
        best = max(best, sum(b[i, s[i + 1]] - b[i, s[i]] for i in range(n)))
    return best


def test_bundle_statistics():
    b = sample_bm_bundle(2, 4, S, size=100_000)
    assert b.shape == (100_000, 2, 5)
    np.testing.assert_array_equal(b[..., 0], 0)
    assert abs(b[:, 0, -1].var() - 1) < 0.02
    assert abs(np.cov(b[:, 0, -1], b[:, 1, -1])[0, 1]) < 0.02


def test_omega_1_examples():
    assert omega_1(np.zeros((3, 6))) == 0
    one = sample_bm_bundle(1, 10, S)
    assert omega_1(one) == one[0, -1]
    lines = np.outer([1.0, 3.0, 2.0], T5)
    assert omega_1(lines) == pytest.approx(3.0)


def test_bundle_validation():
    with pytest.raises(ValidationError):
        omega_1(np.ones((2, 4)))
    with pytest.raises(ValidationError):
        omega_k(np.zeros((3, 4)), 4)
    with pytest.raises(ValidationError):
        gamma(np.zeros((1, 4)))
    with pytest.raises(ValidationError):
        otimes(np.zeros(3), np.zeros(4))


def test_omega_1_matches_subdivision_enumeration():
    gen = S.child(1).generator()
    for n in (1, 2, 3):
        for steps in range(1, 7):
            for _ in range(10):
                b = sample_bm_bundle(n, steps, gen)
                assert omega_1(b) == pytest.approx(naive_omega_1(b), abs=1e-12)
                assert brute_force_omega(b, 1) == pytest.approx(naive_omega_1(b), abs=1e-12)


def test_omega_k_matches_brute_force():
    gen = S.child(2).generator()
    for n in (2, 3):
        for k in range(1, n + 1):
            for steps in range(1, 6):
                for _ in range(5):
                    b = sample_bm_bundle(n, steps, gen)
                    assert omega_k(b, k) == pytest.approx(brute_force_omega(b, k), abs=1e-9)


def test_omega_k_special_cases():
    b = sample_bm_bundle(4, 50, S.child(3), size=20)
    np.testing.assert_allclose(omega_k(b, 4), b[..., -1].sum(axis=-1), atol=1e-12)
    np.testing.assert_array_equal(omega_k(b, 1), omega_1(b))
    np.testing.assert_allclose(omega_k(b, 2), [omega_k(x, 2) for x in b])


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**31), c=st.floats(0, 50), k=st.integers(1, 4))
def test_positive_homogeneity(seed, c, k):
    b = sample_bm_bundle(4, 30, RngStream(seed))
    assert omega_k(c * b, k) == pytest.approx(c * omega_k(b, k), abs=1e-9 * (1 + c))


def test_operator_examples():
    t = np.linspace(0, 1, 101)
    g = np.sin(7 * t) * t
    np.testing.assert_allclose(otimes(np.zeros_like(t), g), g - np.maximum.accumulate(g))
    assert otimes(t, 2 * t)[-1] == pytest.approx(1.0)
    assert odot(t, 2 * t)[-1] == pytest.approx(2.0)
    np.testing.assert_array_equal(odot(g, g), g)


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**31), steps=st.integers(1, 200))
def test_pairwise_identity(seed, steps):
    f, g = sample_bm_bundle(2, steps, RngStream(seed))
    np.testing.assert_allclose(otimes(f, g) + odot(g, f), f + g, atol=1e-12)


def test_gamma_examples():
    t = np.linspace(0, 1, 11)
    out = gamma(np.stack([t, 2 * t]))
    np.testing.assert_allclose(out[:, -1], [1.0, 2.0])
    np.testing.assert_array_equal(gamma(np.zeros((3, 5))), np.zeros((3, 5)))
    assert gamma_top_sum(np.stack([t, 2 * t]), 1) == pytest.approx(2.0)
    assert gamma_top_sum(np.zeros((3, 5)), 2) == 0


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**31), n=st.integers(2, 6), steps=st.integers(1, 100))
def test_gamma_sum_conservation(seed, n, steps):
    b = sample_bm_bundle(n, steps, RngStream(seed))
    np.testing.assert_allclose(gamma(b).sum(axis=0), b.sum(axis=0), atol=1e-9)
    assert gamma_top_sum(b, n) == pytest.approx(b[:, -1].sum(), abs=1e-9)


@pytest.mark.slow
def test_gamma_components_ordered_at_time_one():
    b = sample_bm_bundle(3, 2000, S.child(4), size=10_000)
    g = gamma(b)[..., -1]
    ordered = np.all(np.diff(g, axis=-1) >= 0, axis=-1)
    assert ordered.mean() >= 0.999
