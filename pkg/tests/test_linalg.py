import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_hermitian
from rmtlab.errors import ValidationError
from rmtlab.linalg import eigenvalues_batch, eigenvalues_sorted, sum_top_k, tridiagonalize


def char_poly_roots_2x2(h):
    # roots of l^2 - tr l + det
    tr = (h[0][0] + h[1][1]).real
    det = (h[0][0] * h[1][1] - h[0][1] * h[1][0]).real
    disc = cmath.sqrt(tr * tr - 4 * det).real
    return sorted([(tr - disc) / 2, (tr + disc) / 2])


def test_identity():
    np.testing.assert_array_equal(eigenvalues_sorted(np.eye(3)), [1, 1, 1])


def test_swap_matrix():
    np.testing.assert_allclose(eigenvalues_sorted([[0, 1], [1, 0]]), [-1, 1], atol=1e-15)


def test_complex_2x2():
    np.testing.assert_allclose(eigenvalues_sorted([[2, 1j], [-1j, 2]]), [1, 3], atol=1e-14)


def test_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        eigenvalues_sorted([[1, 2], [0, 1]])
    with pytest.raises(ValidationError):
        eigenvalues_sorted([[1j, 0], [0, 1]])
    with pytest.raises(ValidationError):
        eigenvalues_sorted(np.ones((2, 3)))


def test_agrees_with_2x2_characteristic_polynomial(gen):
    for _ in range(500):
        h = random_hermitian(gen, 2) * gen.uniform(0.1, 10)
        np.testing.assert_allclose(eigenvalues_sorted(h), char_poly_roots_2x2(h), atol=1e-10 * (1 + np.abs(h).max()))


def test_trace_preservation(gen):
    for _ in range(500):
        n = int(gen.integers(1, 9))
        h = random_hermitian(gen, n)
        tr = np.trace(h).real
        assert abs(eigenvalues_sorted(h).sum() - tr) <= 1e-9 * (1 + abs(tr))


def test_residual_bound(gen):
    # for each eigenvalue, the smallest singular value of H - l I bounds min ||Hv - l v||
    for _ in range(200):
        n = int(gen.integers(1, 9))
        h = random_hermitian(gen, n) * gen.uniform(0.1, 100)
        fro = np.linalg.norm(h)
        for lam in eigenvalues_sorted(h):
            smin = np.linalg.svd(h - lam * np.eye(n), compute_uv=False)[-1]
            assert smin <= 1e-10 * (1 + fro)


def test_ascending_and_matches_lapack(gen):
    for n in range(1, 12):
        h = random_hermitian(gen, n)
        lam = eigenvalues_sorted(h)
        assert np.all(np.diff(lam) >= 0)
        np.testing.assert_allclose(lam, np.linalg.eigvalsh(h), atol=1e-11)


def test_degenerate_and_diagonal_inputs():
    np.testing.assert_array_equal(eigenvalues_sorted(np.zeros((4, 4))), np.zeros(4))
    np.testing.assert_allclose(eigenvalues_sorted(np.diag([3.0, -1.0, 2.0])), [-1, 2, 3])
    big = np.full((5, 5), 1.0)
    np.testing.assert_allclose(eigenvalues_sorted(big), [0, 0, 0, 0, 5], atol=1e-13)


def test_tridiagonal_is_real_and_similar(gen):
    h = random_hermitian(gen, 6)
    d, e = tridiagonalize(h)
    t = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    assert np.all(e >= 0)
    np.testing.assert_allclose(np.linalg.eigvalsh(t), np.linalg.eigvalsh(h), atol=1e-12)


def test_batch(gen):
    stack = np.stack([random_hermitian(gen, 3) for _ in range(5)])
    out = eigenvalues_batch(stack)
    for h, lam in zip(stack, out):
        np.testing.assert_array_equal(lam, eigenvalues_sorted(h))


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 6), scale=st.floats(1e-3, 1e3))
def test_spectrum_is_1_lipschitz(seed, n, scale):
    gen = np.random.default_rng(seed)
    a = random_hermitian(gen, n) * scale
    b = a + random_hermitian(gen, n) * scale * gen.uniform(0, 1)
    gap = np.max(np.abs(eigenvalues_sorted(a) - eigenvalues_sorted(b)))
    assert gap <= np.linalg.norm(a - b) + 1e-9 * (1 + scale)


@pytest.mark.parametrize("spectrum, k, expected", [((1, 2, 3), 1, 3), ((1, 2, 3), 3, 6), ((-1, 0, 5), 2, 5)])
def test_sum_top_k(spectrum, k, expected):
    assert sum_top_k(spectrum, k) == expected


@pytest.mark.parametrize("k", [0, 4])
def test_sum_top_k_range(k):
    with pytest.raises(ValidationError):
        sum_top_k((1, 2, 3), k)
