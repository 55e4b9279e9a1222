"""Last-passage percolation on an M x N weight grid.

``w[i, j]`` is the weight of site ``(i+1, j+1)``: ``i`` runs over the M
columns (east), ``j`` over the N rows (north). Paths take unit east/north
steps. All functions accept a leading batch axis (``w.shape == (..., M, N)``).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from rmtlab.errors import CapacityError, ValidationError

BRUTE_FORCE_MAX_SITES = 16


def _as_grid(w) -> np.ndarray:
    w = np.asarray(w)
    if w.ndim < 2 or w.shape[-1] == 0 or w.shape[-2] == 0:
        raise ValidationError(f"expected a non-empty (..., M, N) grid, got shape {w.shape}")
    if np.any(w < 0):
        raise ValidationError("weights must be non-negative")
    return w


def last_passage(w) -> np.ndarray | float:
    """Maximal weight of an east/north path from (1, 1) to (M, N)."""
    w = _as_grid(w)
    m = w.shape[-2]
    col = np.cumsum(w[..., 0, :], axis=-1)
    for i in range(1, m):
        # T(i, j) = w(i, j) + max(T(i-1, j), T(i, j-1)), as a running max up the column
        prev = col
        col = np.empty_like(prev)
        col[..., 0] = prev[..., 0] + w[..., i, 0]
        for j in range(1, w.shape[-1]):
            col[..., j] = w[..., i, j] + np.maximum(prev[..., j], col[..., j - 1])
    out = col[..., -1]
    return out.item() if out.ndim == 0 else out


@lru_cache(maxsize=None)
def _interlacing_moves(n: int, k: int):
    """States are the k row indices where the paths top out in one column.

    A move a -> b (previous column -> this column) is allowed when
    ``a[p] <= b[p] < a[p+1]``: path p climbs rows a[p]..b[p] here, and stays
    below the row where path p+1 entered.
    """
    states = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(states)}
    moves = []
    for b in states:
        preds = [
            index[a]
            for a in states
            if all(a[p] <= b[p] for p in range(k)) and all(b[p] < a[p + 1] for p in range(k - 1))
        ]
        moves.append(preds)
    return states, index, moves


def last_passage_disjoint(w, k: int):
    """Maximal total weight of k vertex-disjoint east/north paths.

    With M >= N > k the paths are pinned to start at (1, p) and end at
    (M, N-k+p), which loses nothing when weights are non-negative (checked
    against :func:`brute_force_disjoint`, where endpoints are free). Narrow
    grids are transposed first; k >= min(M, N) straight lines cover every site.
    """
    w = _as_grid(w)
    m, n = w.shape[-2:]
    if int(k) != k or not 1 <= k <= n:
        raise ValidationError(f"k={k} out of range 1..{n}")
    if k == 1:
        return last_passage(w)
    if k >= min(m, n):
        out = w.sum(axis=(-2, -1))
        return out.item() if np.ndim(out) == 0 else out
    if m < n:
        w = np.swapaxes(w, -1, -2)
        m, n = n, m
    states, index, moves = _interlacing_moves(n, k)
    batch = w.shape[:-2]
    zero = np.zeros((*batch, 1), dtype=float)
    neg = np.full(batch, -np.inf)
    value = [neg] * len(states)
    value[index[tuple(range(k))]] = np.zeros(batch)
    for i in range(m):
        # csum[..., r + 1] = w[i, 0] + ... + w[i, r]
        csum = np.concatenate([zero, np.cumsum(w[..., i, :], axis=-1, dtype=float)], axis=-1)
        new = []
        for b, preds in zip(states, moves):
            best = neg
            top = sum(csum[..., r + 1] for r in b)
            for a_idx in preds:
                a = states[a_idx]
                gain = top - sum(csum[..., r] for r in a)
                best = np.maximum(best, value[a_idx] + gain)
            new.append(best)
        value = new
    out = value[index[tuple(range(n - k, n))]]
    return out.item() if np.ndim(out) == 0 else out


@lru_cache(maxsize=None)
def _path_masks(m: int, n: int) -> np.ndarray:
    """Bitmask of every east/north lattice path (any start, any end) in an m x n grid."""
    masks = set()

    def extend(i, j, mask):
        mask |= 1 << (i * n + j)
        masks.add(mask)
        if i + 1 < m:
            extend(i + 1, j, mask)
        if j + 1 < n:
            extend(i, j + 1, mask)

    for i in range(m):
        for j in range(n):
            extend(i, j, 0)
    return np.array(sorted(masks), dtype=np.uint64)


@lru_cache(maxsize=None)
def _family_masks(m: int, n: int, k: int) -> np.ndarray:
    """Site sets covered by some family of k pairwise disjoint paths."""
    paths = _path_masks(m, n)
    if k == 1:
        return paths
    smaller = _family_masks(m, n, k - 1)
    found = []
    for p in paths:
        ok = smaller[(smaller & p) == 0]
        if ok.size:
            found.append(ok | p)
    if not found:
        return np.zeros(0, dtype=np.uint64)
    return np.unique(np.concatenate(found))


def _mask_matrix(masks: np.ndarray, sites: int) -> np.ndarray:
    bits = (masks[:, None] >> np.arange(sites, dtype=np.uint64)[None, :]) & np.uint64(1)
    return bits.astype(float)


def brute_force_disjoint(w, k: int):
    """Exhaustive maximum over every family of k vertex-disjoint paths with free endpoints.

    Limited to grids with at most 16 sites. Exact for integer weights.
    """
    w = np.asarray(w)
    if w.ndim < 2 or w.shape[-1] == 0 or w.shape[-2] == 0:
        raise ValidationError(f"expected a non-empty (..., M, N) grid, got shape {w.shape}")
    m, n = w.shape[-2:]
    if m * n > BRUTE_FORCE_MAX_SITES:
        raise CapacityError(f"{m}x{n} grid exceeds the {BRUTE_FORCE_MAX_SITES}-site enumeration limit")
    if int(k) != k or k < 1:
        raise ValidationError(f"k={k} must be a positive integer")
    masks = _family_masks(m, n, int(k))
    if masks.size == 0:
        raise ValidationError(f"no family of {k} disjoint paths fits in a {m}x{n} grid")
    flat = w.reshape(*w.shape[:-2], m * n)
    if np.issubdtype(w.dtype, np.integer):
        totals = flat.astype(np.int64) @ _mask_matrix(masks, m * n).astype(np.int64).T
    else:
        totals = flat @ _mask_matrix(masks, m * n).T
    out = totals.max(axis=-1)
    return out.item() if np.ndim(out) == 0 else out
