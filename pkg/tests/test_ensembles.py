import math

import numpy as np
import pytest
from scipy import integrate

from conftest import random_hermitian, random_unitary
from rmtlab.errors import ValidationError
from rmtlab.linalg import eigenvalues_batch
from rmtlab.rng import RngStream
from rmtlab.ensembles import (
    log_density_gue,
    log_density_lue_eigen,
    log_density_psi_m,
    rescale_laguerre_path,
    rescale_lue,
    sample_exp_grid,
    sample_geom_matrix,
    sample_gue,
    sample_hermitian_bm,
    sample_laguerre_path,
    sample_lue,
)
from rmtlab.stats import ks_two_sample

S = RngStream(7)


def test_gue_is_hermitian_and_trace_square_mean():
    h = sample_gue(3, S, size=100_000)
    np.testing.assert_array_equal(h, np.swapaxes(h, -1, -2).conj())
    tr2 = np.sum(np.abs(h) ** 2, axis=(-1, -2))
    assert abs(tr2.mean() - 9) < 0.2


def test_gue_rejects_zero_dimension():
    with pytest.raises(ValidationError):
        sample_gue(0, S)


def test_gue_law_is_symmetric():
    lam = eigenvalues_batch(sample_gue(3, S.child(1), size=10_000))
    assert ks_two_sample(lam[:, -1], -lam[:, 0]).statistic < 0.02


def test_lue_mean_trace_and_psd():
    y = sample_lue(2, 10, S, size=100_000)
    assert abs(np.trace(y, axis1=-2, axis2=-1).real.mean() - 20) < 0.3
    assert eigenvalues_batch(y[:2000]).min() >= -1e-10


def test_lue_requires_m_ge_n():
    with pytest.raises(ValidationError):
        sample_lue(3, 2, S)


def test_rescale_lue_examples():
    m = 16
    np.testing.assert_array_equal(rescale_lue(m * np.eye(3), m), np.zeros((3, 3)))
    np.testing.assert_allclose(rescale_lue([[m + math.sqrt(m)]], m), [[1.0]])
    z = rescale_lue(sample_lue(1, 5, S, size=100_000), 5)
    assert abs(z.real.mean()) < 0.03


def test_hermitian_bm():
    grid = np.linspace(0, 1, 5)
    path = sample_hermitian_bm(2, grid, S, size=100_000)
    np.testing.assert_array_equal(path.values[:, 0], 0)
    assert abs(path.at(1.0)[:, 0, 0].real.var() - 1) < 0.02
    with pytest.raises(ValidationError):
        sample_hermitian_bm(2, [0, 0.5, 0.4], S)


def test_laguerre_path_mean_and_marginal():
    m, t, count = 4, 0.5, 100_000
    path = sample_laguerre_path(2, m, [0, t, 1.0], S, size=count)
    np.testing.assert_array_equal(path.values[:, 0], 0)
    y11 = path.at(t)[:, 0, 0].real
    assert abs(y11.mean() - m * t) < 3 * 3 * math.sqrt(m) * t / math.sqrt(count)
    # final grid point has the LUE law
    top_path = eigenvalues_batch(path.at(1.0)[:10_000])[:, -1]
    top_lue = eigenvalues_batch(sample_lue(2, m, S.child(3), size=10_000))[:, -1]
    assert ks_two_sample(top_path, top_lue).p_value > 0.001


@pytest.mark.slow
def test_rescaled_laguerre_variance_is_t_squared():
    path = sample_laguerre_path(1, 2000, [0, 0.5, 1.0], S.child(5), size=10_000)
    z = rescale_laguerre_path(path, 2000)
    np.testing.assert_array_equal(z.values[:, 0], 0)
    for t in (0.5, 1.0):
        var = z.at(t)[:, 0, 0].real.var(ddof=1)
        assert abs(var / t**2 - 1) < 0.05


def test_samplers_are_deterministic():
    a = sample_gue(4, RngStream(11, 3), size=5)
    b = sample_gue(4, RngStream(11, 3), size=5)
    c = sample_gue(4, RngStream(11, 4), size=5)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)
    np.testing.assert_array_equal(sample_exp_grid(3, 2, RngStream(1)), sample_exp_grid(3, 2, RngStream(1)))


def test_log_density_gue_examples(gen):
    assert log_density_gue(np.zeros((1, 1))) == pytest.approx(-0.5 * math.log(2 * math.pi))
    assert log_density_gue([[2.0]]) == pytest.approx(-2 - 0.5 * math.log(2 * math.pi))
    for _ in range(20):
        h = random_hermitian(gen, 4)
        u = random_unitary(gen, 4)
        assert log_density_gue(u @ h @ u.conj().T) == pytest.approx(log_density_gue(h), abs=1e-9)


def test_psi_m_support_and_normalisation():
    m = 50
    assert log_density_psi_m(np.diag([-math.sqrt(m), 0.1]), m) == -math.inf
    assert log_density_psi_m(np.diag([-math.sqrt(m) - 1, 0.1]), m) == -math.inf
    total, _ = integrate.quad(lambda x: math.exp(log_density_psi_m([[x]], m)), -math.sqrt(m), 10, limit=200)
    assert abs(total - 1) < 1e-4


def test_psi_m_approaches_gue_density():
    h = np.diag([0.5, -0.5])
    gue = math.exp(log_density_gue(h))
    errs = [abs(math.exp(log_density_psi_m(h, m)) - gue) / gue for m in (10**2, 10**4, 10**6)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 0.01


def test_lue_eigen_density_examples():
    t = 1.7
    assert log_density_lue_eigen([t], 1, 1) == pytest.approx(-t)
    assert log_density_lue_eigen([t], 1, 3) == pytest.approx(2 * math.log(t) - t - math.log(2))
    with pytest.raises(ValidationError):
        log_density_lue_eigen([2.0, 1.0], 2, 2)
    with pytest.raises(ValidationError):
        log_density_lue_eigen([-1.0, 1.0], 2, 2)


def test_lue_eigen_density_normalises():
    f = lambda x2, x1: math.exp(log_density_lue_eigen([x1, x2], 2, 2))
    total, _ = integrate.dblquad(f, 0, 60, lambda x1: x1, lambda x1: 60)
    assert abs(total - 1) < 1e-3


def test_exp_grid_mean():
    w = sample_exp_grid(50, 50, S, size=100)
    assert w.shape == (100, 50, 50)
    assert abs(w.mean() - 1) < 0.01


def test_geometric_parameterisation():
    x = sample_geom_matrix(1, 1, 0.5, S, size=100_000).ravel()
    assert x.min() == 0
    assert abs(x.mean() - 1) < 0.02
    assert abs(np.mean(x == 0) - 0.5) < 0.01
    for q in (0.0, 1.0):
        with pytest.raises(ValidationError):
            sample_geom_matrix(2, 2, q, S)
