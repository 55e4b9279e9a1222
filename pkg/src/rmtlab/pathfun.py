"""Brownian path bundles and the functionals built on them.

A bundle is an array of shape ``(..., n_paths, steps + 1)`` holding path
values on the uniform grid ``t_j = j / steps`` of [0, 1], with value 0 at
t = 0. Sup/inf over time are taken over grid points only.

``omega_k`` is the directed-percolation functional: the best total increment
collected by k ordered "walkers" that each move up through the paths as time
advances. ``gamma`` is the recursive inf/sup path transformation built from
:func:`otimes` and :func:`odot`.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations

import numpy as np

from rmtlab.errors import ValidationError
from rmtlab.rng import as_generator


def _as_bundle(b) -> np.ndarray:
    b = np.asarray(b, dtype=float)
    if b.ndim < 2 or b.shape[-2] < 1 or b.shape[-1] < 2:
        raise ValidationError(f"expected a (..., n_paths, steps + 1) bundle with steps >= 1, got {b.shape}")
    if np.any(b[..., 0] != 0.0):
        raise ValidationError("every path must start at 0")
    return b


def sample_bm_bundle(n_paths: int, steps: int, rng, size=None) -> np.ndarray:
    """``n_paths`` independent standard Brownian motions on ``steps + 1`` grid points."""
    if n_paths < 1 or steps < 1:
        raise ValidationError("need n_paths >= 1 and steps >= 1")
    lead = () if size is None else ((size,) if np.isscalar(size) else tuple(size))
    incs = as_generator(rng).standard_normal((*lead, n_paths, steps)) * math.sqrt(1.0 / steps)
    out = np.zeros((*lead, n_paths, steps + 1))
    np.cumsum(incs, axis=-1, out=out[..., 1:])
    return out


def omega_1(b):
    """sup over grid subdivisions 0 = t_0 <= ... <= t_N = 1 of sum_i B_i(t_i) - B_i(t_{i-1})."""
    b = _as_bundle(b)
    best = b[..., 0, :]
    for i in range(1, b.shape[-2]):
        # best_i(t) = B_i(t) + max_{s <= t} (best_{i-1}(s) - B_i(s))
        f = b[..., i, :]
        best = f + np.maximum.accumulate(best - f, axis=-1)
    out = best[..., -1]
    return out.item() if out.ndim == 0 else out


@lru_cache(maxsize=None)
def _ordered_states(n: int, k: int):
    states = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(states)}
    # for coordinate p: pairs (state, state with row p lowered by one), in lex order
    lowers = []
    for p in reversed(range(k)):
        pairs = []
        for s in states:
            lower = s[:p] + (s[p] - 1,) + s[p + 1:]
            if lower in index:
                pairs.append((index[s], index[lower]))
        lowers.append(pairs)
    return states, index, lowers


def omega_k(b, k: int):
    """Best total increment of k non-colliding walkers through the paths.

    Walker p sits on a path at each time step, only ever moves to higher
    paths, and at every time sits strictly below walker p+1. The walkers start
    on paths 1..k and finish on paths N-k+1..N; each collects the increments of
    the path it occupies. This is the nested-subdivision supremum restricted
    to grid times.
    """
    b = _as_bundle(b)
    n = b.shape[-2]
    if int(k) != k or not 1 <= k <= n:
        raise ValidationError(f"k={k} out of range 1..{n}")
    if k == 1:
        return omega_1(b)
    incs = np.diff(b, axis=-1)
    states, index, lowers = _ordered_states(n, int(k))
    batch = b.shape[:-2]
    value = np.full((len(states), *batch), -np.inf)
    value[index[tuple(range(k))]] = 0.0
    gain_rows = np.array(states)

    def climb(v):
        # closure under "some walkers move up"; lower the highest coordinate's pass first
        for pairs in lowers:
            for hi, lo in pairs:
                v[hi] = np.maximum(v[hi], v[lo])
        return v

    for j in range(incs.shape[-1]):
        value = climb(value)
        step = np.moveaxis(incs[..., j], -1, 0)  # (n, *batch)
        value = value + step[gain_rows].sum(axis=1)
    value = climb(value)
    out = value[index[tuple(range(n - k, n))]]
    return out.item() if np.ndim(out) == 0 else out


def brute_force_omega(b, k: int) -> float:
    """Enumerate every grid-valued nested subdivision family ``s[p][i]`` (single bundle only).

    ``s[p][i]`` is the time index where walker p leaves path p+i-1; the
    constraints are ``s[p][i] <= s[p][i+1]`` and ``s[p+1][i] <= s[p][i]``.
    """
    b = _as_bundle(b)
    if b.ndim != 2:
        raise ValidationError("brute force works on one bundle at a time")
    n, points = b.shape
    steps = points - 1
    free = n - k
    best = -math.inf
    # one non-decreasing sequence of ``free`` jump times per walker
    sequences = list(combinations(range(steps + free), free))
    sequences = [tuple(c - r for r, c in enumerate(seq)) for seq in sequences]

    def s_of(seq, i):
        if i <= 0:
            return 0
        if i >= free + 1:
            return steps
        return seq[i - 1]

    def search(p, chosen):
        nonlocal best
        if p == k:
            total = 0.0
            for j in range(1, n + 1):
                for q in range(1, k + 1):
                    seq = chosen[q - 1]
                    hi, lo = s_of(seq, j - q + 1), s_of(seq, j - q)
                    total += b[j - 1, hi] - b[j - 1, lo]
            best = max(best, total)
            return
        for seq in sequences:
            if p and any(seq[i] > chosen[p - 1][i] for i in range(free)):
                continue
            search(p + 1, chosen + [seq])

    search(0, [])
    return best


def _check_pair(f, g):
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    if f.shape != g.shape:
        raise ValidationError(f"paths on different grids: {f.shape} vs {g.shape}")
    return f, g


def otimes(f, g) -> np.ndarray:
    """``(f ⊗ g)(t) = min_{s <= t} f(s) + g(t) - g(s)`` along the last axis."""
    f, g = _check_pair(f, g)
    return g + np.minimum.accumulate(f - g, axis=-1)


def odot(f, g) -> np.ndarray:
    """``(f ⊙ g)(t) = max_{s <= t} f(s) + g(t) - g(s)`` along the last axis."""
    f, g = _check_pair(f, g)
    return g + np.maximum.accumulate(f - g, axis=-1)


def _gamma(paths: list[np.ndarray]) -> list[np.ndarray]:
    if len(paths) == 1:
        return paths
    folded = paths[0]
    rest = []
    for f in paths[1:]:
        rest.append(odot(f, folded))
        folded = otimes(folded, f)
    return [folded, *_gamma(rest)]


def gamma(b) -> np.ndarray:
    """Recursive inf/sup transform of a bundle; ``f_1 ⊗ ... ⊗ f_N`` folds left to right."""
    b = _as_bundle(b)
    if b.shape[-2] < 2:
        raise ValidationError("gamma needs at least two paths")
    comps = _gamma([b[..., i, :] for i in range(b.shape[-2])])
    return np.stack(comps, axis=-2)


def gamma_top_sum(b, k: int):
    """Sum at t = 1 of the last k components of :func:`gamma`."""
    b = _as_bundle(b)
    n = b.shape[-2]
    if int(k) != k or not 1 <= k <= n:
        raise ValidationError(f"k={k} out of range 1..{n}")
    out = gamma(b)[..., n - k:, -1].sum(axis=-1)
    return out.item() if np.ndim(out) == 0 else out
