"""Empirical CDFs, Kolmogorov-Smirnov tests and moment summaries."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from rmtlab.errors import ValidationError

_SERIES_TOL = 1e-12


@dataclass(frozen=True)
class EmpiricalSample:
    values: np.ndarray
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        v = np.sort(np.asarray(self.values, dtype=float).ravel())
        if v.size == 0:
            raise ValidationError("empirical sample must be non-empty")
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class KsResult:
    statistic: float
    p_value: float
    n1: int
    n2: int | None = None


@dataclass(frozen=True)
class Moments:
    mean: float
    variance: float
    standard_error: float


def _sample(a) -> EmpiricalSample:
    return a if isinstance(a, EmpiricalSample) else EmpiricalSample(a)


def ecdf_at(s, x: float) -> float:
    """Fraction of sample values ``<= x``."""
    v = _sample(s).values
    return np.searchsorted(v, x, side="right") / v.size


def kolmogorov_sf(x: float) -> float:
    """P(K > x) for the limiting Kolmogorov distribution.

    Alternating series ``2 sum (-1)^(k-1) exp(-2 k^2 x^2)`` stopped once a term
    drops below 1e-12; for small x, where that series converges slowly, the
    equivalent theta-function series for the CDF is used instead.
    """
    if x <= 0.0:
        return 1.0
    if x < 0.5:
        c = math.pi**2 / (8.0 * x * x)
        total = 0.0
        j = 1
        while True:
            term = math.exp(-(2 * j - 1) ** 2 * c)
            total += term
            if term < _SERIES_TOL:
                break
            j += 1
        return min(1.0, max(0.0, 1.0 - math.sqrt(2.0 * math.pi) / x * total))
    total = 0.0
    k = 1
    while True:
        term = math.exp(-2.0 * k * k * x * x)
        total += term if k % 2 else -term
        if term < _SERIES_TOL:
            break
        k += 1
    return min(1.0, max(0.0, 2.0 * total))


def ks_two_sample(a, b) -> KsResult:
    """Two-sample KS statistic (exact sup of the ECDF gap) with asymptotic p-value."""
    va, vb = _sample(a).values, _sample(b).values
    grid = np.concatenate([va, vb])
    fa = np.searchsorted(va, grid, side="right") / va.size
    fb = np.searchsorted(vb, grid, side="right") / vb.size
    d = float(np.max(np.abs(fa - fb)))
    n1, n2 = va.size, vb.size
    return KsResult(d, kolmogorov_sf(d * math.sqrt(n1 * n2 / (n1 + n2))), n1, n2)


def ks_against_cdf(a, cdf: Callable[[np.ndarray], np.ndarray]) -> KsResult:
    """One-sample KS statistic against a continuous or step CDF."""
    v = _sample(a).values
    n = v.size
    u, counts = np.unique(v, return_counts=True)
    right = np.cumsum(counts) / n
    left = right - counts / n
    # the gap is extremal at a sample point or just below one
    f_at = np.asarray(cdf(u), dtype=float)
    f_below = np.asarray(cdf(np.nextafter(u, -np.inf)), dtype=float)
    d = float(max(np.max(np.abs(right - f_at)), np.max(np.abs(left - f_below))))
    return KsResult(d, kolmogorov_sf(d * math.sqrt(n)), n)


def moment_summary(a) -> Moments:
    v = _sample(a).values
    if v.size < 2:
        raise ValidationError("need at least two observations")
    var = float(np.var(v, ddof=1))
    return Moments(float(np.mean(v)), var, math.sqrt(var / v.size))
