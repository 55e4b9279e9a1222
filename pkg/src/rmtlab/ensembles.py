"""GUE / LUE samplers, their Brownian process versions, random weight grids,
and the matching log-densities.

Complex standard Gaussians have ``E|X|^2 = 1`` (real and imaginary parts
independent with variance 1/2). With that convention the GUE density is
exactly ``exp(-Tr H^2 / 2) / (2^(N/2) pi^(N^2/2))``.

Samplers take an :class:`~rmtlab.rng.RngStream` (or a numpy ``Generator``)
and an optional ``size`` for a leading batch axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from rmtlab.errors import ValidationError
from rmtlab.linalg import as_hermitian, eigenvalues_sorted
from rmtlab.rng import as_generator

_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class MatrixPath:
    """Matrix-valued path sampled on ``grid``; ``values[i]`` is the matrix at ``grid[i]``.

    ``values`` has shape ``(len(grid), n, n)``, or ``(batch, len(grid), n, n)``
    when sampled with ``size``.
    """

    grid: np.ndarray
    values: np.ndarray

    def at(self, t: float) -> np.ndarray:
        idx = np.flatnonzero(np.isclose(self.grid, t, rtol=0, atol=1e-12))
        if idx.size == 0:
            raise ValidationError(f"time {t} is not on the grid")
        return self.values[..., idx[0], :, :]


def _check_dim(n: int, name: str = "n") -> int:
    if int(n) != n or n < 1:
        raise ValidationError(f"{name} must be a positive integer, got {n!r}")
    return int(n)


def _shape(size, *tail) -> tuple[int, ...]:
    if size is None:
        return tail
    if isinstance(size, (int, np.integer)):
        return (int(size), *tail)
    return (*size, *tail)


def _complex_normal(gen: np.random.Generator, shape, scale=1.0) -> np.ndarray:
    z = gen.standard_normal((*shape, 2))
    return (scale * _SQRT_HALF) * (z[..., 0] + 1j * z[..., 1])


def _check_grid(grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValidationError("time grid must be a non-empty 1-d sequence")
    if grid[0] != 0.0:
        raise ValidationError("time grid must start at 0")
    if np.any(np.diff(grid) <= 0):
        raise ValidationError("time grid must be strictly ascending")
    return grid


def _gue_from(gen: np.random.Generator, shape) -> np.ndarray:
    g = gen.standard_normal((*shape, 2))
    g = g[..., 0] + 1j * g[..., 1]
    # diag: Re g_ii ~ N(0,1); off-diag: (g_ij + conj g_ji)/2 has E|.|^2 = 1
    return 0.5 * (g + np.swapaxes(g, -1, -2).conj())


def sample_gue(n: int, rng, size=None) -> np.ndarray:
    """Draw from GUE(n)."""
    n = _check_dim(n)
    return _gue_from(as_generator(rng), _shape(size, n, n))


def sample_lue(n: int, m: int, rng, size=None) -> np.ndarray:
    """Draw ``A A*`` with ``A`` an n x m matrix of complex standard Gaussians."""
    n, m = _check_dim(n), _check_dim(m, "m")
    if m < n:
        raise ValidationError(f"LUE needs m >= n, got n={n}, m={m}")
    a = _complex_normal(as_generator(rng), _shape(size, n, m))
    return a @ np.swapaxes(a, -1, -2).conj()


def rescale_lue(y, m: int) -> np.ndarray:
    """``(Y - m I) / sqrt(m)``; works on a single matrix or a stack."""
    if m < 1:
        raise ValidationError("m must be >= 1")
    y = np.asarray(y)
    n = y.shape[-1]
    return (y - m * np.eye(n)) / math.sqrt(m)


def sample_hermitian_bm(n: int, grid, rng, size=None) -> MatrixPath:
    """Hermitian Brownian motion on ``grid``: at time t the value is sqrt(t) * GUE(n)."""
    n = _check_dim(n)
    grid = _check_grid(grid)
    gen = as_generator(rng)
    dt = np.diff(grid)
    incs = _gue_from(gen, _shape(size, dt.size, n, n)) * np.sqrt(dt)[:, None, None]
    values = np.zeros(_shape(size, grid.size, n, n), dtype=complex)
    values[..., 1:, :, :] = np.cumsum(incs, axis=-3)
    return MatrixPath(grid, values)


def sample_laguerre_path(n: int, m: int, grid, rng, size=None) -> MatrixPath:
    """Laguerre process ``A(t) A(t)*`` with ``A`` an n x m array of complex Brownian motions."""
    n, m = _check_dim(n), _check_dim(m, "m")
    if m < n:
        raise ValidationError(f"Laguerre process needs m >= n, got n={n}, m={m}")
    grid = _check_grid(grid)
    gen = as_generator(rng)
    dt = np.diff(grid)
    incs = _complex_normal(gen, _shape(size, dt.size, n, m)) * np.sqrt(dt)[:, None, None]
    a = np.zeros(_shape(size, grid.size, n, m), dtype=complex)
    a[..., 1:, :, :] = np.cumsum(incs, axis=-3)
    return MatrixPath(grid, a @ np.swapaxes(a, -1, -2).conj())


def rescale_laguerre_path(path: MatrixPath, m: int) -> MatrixPath:
    """``(Y(t) - m t I) / sqrt(m)`` at every grid time."""
    if m < 1:
        raise ValidationError("m must be >= 1")
    n = path.values.shape[-1]
    centre = path.grid[:, None, None] * (m * np.eye(n))
    return MatrixPath(path.grid, (path.values - centre) / math.sqrt(m))


def log_density_gue(h) -> float:
    """log of the GUE(N) density with respect to Lebesgue measure on Hermitian matrices."""
    h = as_hermitian(h)
    n = h.shape[0]
    tr_h2 = float(np.sum(np.abs(h) ** 2))
    return -0.5 * tr_h2 - 0.5 * n * math.log(2.0) - 0.5 * n * n * math.log(math.pi)


def log_c_m(n: int, m: int) -> float:
    """log of the normalising constant of the density of ``(Y - m I)/sqrt(m)``, Y ~ LUE(n, m)."""
    log_m = math.log(m)
    return (
        -m * n
        + 0.5 * n * n * log_m
        + n * (m - n) * log_m
        - 0.5 * n * (n - 1) * math.log(math.pi)
        - sum(math.lgamma(m - j + 1) for j in range(1, n + 1))
    )


def log_density_psi_m(h, m: int) -> float:
    """log density of the rescaled LUE(N, m) matrix at ``h``.

    Returns ``-inf`` outside the support, i.e. when ``I + h/sqrt(m)`` is not
    positive definite.
    """
    h = as_hermitian(h)
    n = h.shape[0]
    if m < n:
        raise ValidationError(f"need m >= n, got n={n}, m={m}")
    root_m = math.sqrt(m)
    lam = eigenvalues_sorted(h)
    if lam[0] / root_m <= -1.0:
        return -math.inf
    log_det = float(np.sum(np.log1p(lam / root_m)))
    return log_c_m(n, m) + (m - n) * log_det - root_m * float(np.sum(lam))


def log_d_mn(n: int, m: int) -> float:
    """log of prod_{j=0}^{n-1} j! (m-n+j)!"""
    return sum(math.lgamma(j + 1) + math.lgamma(m - n + j + 1) for j in range(n))


def log_density_lue_eigen(x, n: int, m: int) -> float:
    """log joint density of the ordered LUE(n, m) eigenvalues ``x_1 <= ... <= x_n``."""
    x = np.asarray(x, dtype=float)
    n, m = _check_dim(n), _check_dim(m, "m")
    if m < n:
        raise ValidationError(f"need m >= n, got n={n}, m={m}")
    if x.shape != (n,):
        raise ValidationError(f"expected {n} eigenvalues, got shape {x.shape}")
    if np.any(x < 0) or np.any(np.diff(x) < 0):
        raise ValidationError("eigenvalues must be non-negative and ascending")
    diffs = x[None, :] - x[:, None]
    iu = np.triu_indices(n, 1)
    with np.errstate(divide="ignore"):
        vandermonde = 2.0 * float(np.sum(np.log(diffs[iu])))
        power = (m - n) * float(np.sum(np.log(x))) if m > n else 0.0
    return vandermonde + power - float(np.sum(x)) - log_d_mn(n, m)


def sample_exp_grid(m: int, n: int, rng, size=None) -> np.ndarray:
    """m x n grid (``w[i, j]``, i the column) of i.i.d. unit exponentials."""
    m, n = _check_dim(m, "m"), _check_dim(n)
    return as_generator(rng).standard_exponential(_shape(size, m, n))


def sample_geom_matrix(m: int, n: int, q: float, rng, size=None) -> np.ndarray:
    """m x n integer grid of i.i.d. geometrics with ``P(x = s) = (1 - q) q^s``, s >= 0."""
    m, n = _check_dim(m, "m"), _check_dim(n)
    if not 0.0 < q < 1.0:
        raise ValidationError(f"q must lie in (0, 1), got {q}")
    return as_generator(rng).geometric(1.0 - q, _shape(size, m, n)).astype(np.int64) - 1
