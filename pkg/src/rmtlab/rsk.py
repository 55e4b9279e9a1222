"""RSK correspondence for non-negative integer matrices, semi-standard tableau
counts, and the law of the RSK shape under i.i.d. geometric entries."""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from rmtlab.errors import ConsistencyError, ValidationError

SSYT_BRUTE_FORCE_MAX = 12

Tableau = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TableauPair:
    p: Tableau
    q: Tableau
    shape: tuple[int, ...]


def as_partition(shape: Sequence[int]) -> tuple[int, ...]:
    """Validate a partition and drop trailing zeros."""
    parts = tuple(int(x) for x in shape)
    if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValidationError(f"{shape!r} is not a weakly decreasing sequence of non-negative integers")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def h_form(shape: Sequence[int], n: int) -> tuple[int, ...]:
    """``h_i = lambda_i + n - i`` (i = 1..n), strictly decreasing."""
    parts = as_partition(shape)
    if len(parts) > n:
        raise ValidationError(f"shape {parts} has more than {n} rows")
    padded = parts + (0,) * (n - len(parts))
    return tuple(lam + n - i for i, lam in enumerate(padded, start=1))


def _as_int_matrix(a) -> np.ndarray:
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise ValidationError(f"expected a 2-d matrix, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.isfinite(arr)) or np.any(arr != np.round(arr)):
            raise ValidationError("RSK needs integer entries")
    if np.any(arr < 0):
        raise ValidationError("RSK needs non-negative entries")
    return arr.astype(np.int64)


def _insert_run(rows: list[list[int]], x: int, count: int) -> None:
    """Row-insert ``count`` copies of ``x``; equal letters bump a contiguous block."""
    pending = [(x, count)]
    r = 0
    while pending:
        if r == len(rows):
            rows.append([])
        row = rows[r]
        bumped: list[int] = []
        for value, c in pending:
            pos = bisect_right(row, value)
            bumped.extend(row[pos:pos + c])
            row[pos:pos + c] = [value] * c
        pending = []
        for value in bumped:
            if pending and pending[-1][0] == value:
                pending[-1] = (value, pending[-1][1] + 1)
            else:
                pending.append((value, 1))
        r += 1


def _p_rows(a: np.ndarray, record: list[list[int]] | None = None) -> list[list[int]]:
    rows: list[list[int]] = []
    m, n = a.shape
    for i in range(m):
        before = [len(r) for r in rows]
        for j in range(n):
            if a[i, j]:
                _insert_run(rows, j + 1, int(a[i, j]))
        if record is not None:
            # letters recorded for one matrix row form a horizontal strip
            for r, row in enumerate(rows):
                grown = len(row) - (before[r] if r < len(before) else 0)
                if r == len(record):
                    record.append([])
                record[r].extend([i + 1] * grown)
    return rows


def rsk(a) -> TableauPair:
    """RSK image of an M x N non-negative integer matrix.

    The biword lists pair ``(i, j)`` with multiplicity ``a[i-1, j-1]`` in
    lexicographic order; ``j`` is row-inserted into P (letters 1..N) and
    ``i`` recorded in Q (letters 1..M).
    """
    arr = _as_int_matrix(a)
    q: list[list[int]] = []
    p = _p_rows(arr, q)
    shape = tuple(len(r) for r in p)
    return TableauPair(tuple(map(tuple, p)), tuple(map(tuple, q)), shape)


def rsk_shape(a) -> tuple[int, ...]:
    """Common shape of the RSK tableau pair of ``a``."""
    return tuple(len(r) for r in _p_rows(_as_int_matrix(a)))


def _ssyt_brute(shape: tuple[int, ...], k: int) -> int:
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        low = 1
        if c > 0:
            low = filling[(r, c - 1)]
        if r > 0:
            low = max(low, filling[(r - 1, c)] + 1)
        total = 0
        for v in range(low, k + 1):
            filling[(r, c)] = v
            total += fill(idx + 1)
        filling.pop((r, c), None)
        return total

    return fill(0)


def _ssyt_hook_content(shape: tuple[int, ...], k: int) -> int:
    conj = [sum(1 for part in shape if part > c) for c in range(shape[0])] if shape else []
    num = den = 1
    for r, length in enumerate(shape):
        for c in range(length):
            num *= k + c - r
            den *= (length - c - 1) + (conj[c] - r - 1) + 1
    return num // den


@lru_cache(maxsize=None)
def _ssyt_count(shape: tuple[int, ...], k: int) -> int:
    if len(shape) > k:
        return 0
    if sum(shape) <= SSYT_BRUTE_FORCE_MAX:
        return _ssyt_brute(shape, k)
    return _ssyt_hook_content(shape, k)


def ssyt_count(shape: Sequence[int], alphabet_size: int) -> int:
    """Number of semi-standard Young tableaux of ``shape`` with letters in 1..K.

    Exhaustive filling up to 12 cells; the hook-content formula beyond.
    """
    if alphabet_size < 0:
        raise ValidationError("alphabet size must be non-negative")
    return _ssyt_count(as_partition(shape), int(alphabet_size))


@lru_cache(maxsize=None)
def _l_count(shape: tuple[int, ...], m: int, n: int) -> int:
    h = h_form(shape, n)
    c_mn = 1
    for j in range(n):
        c_mn *= math.factorial(j) * math.factorial(m - n + j)
    vandermonde = 1
    for i in range(n):
        for j in range(i + 1, n):
            vandermonde *= (h[j] - h[i]) ** 2
    ratio = Fraction(1)
    for hi in h:
        ratio *= Fraction(math.factorial(hi + m - n), math.factorial(hi))
    value = Fraction(vandermonde) * ratio / c_mn
    if value.denominator != 1:
        raise ConsistencyError(f"L({shape}, {m}, {n}) evaluated to non-integer {value}")
    return value.numerator


def l_count(shape: Sequence[int], m: int, n: int) -> int:
    """Number of M x N non-negative integer matrices whose RSK shape is ``shape``.

    Evaluated from the closed product over the shifted parts ``h``; transposing
    is a bijection, so ``m < n`` is handled by swapping.
    """
    if m < 1 or n < 1:
        raise ValidationError(f"need m, n >= 1, got m={m}, n={n}")
    if m < n:
        m, n = n, m
    parts = as_partition(shape)
    if len(parts) > n:
        return 0
    return _l_count(parts, int(m), int(n))


def shape_log_pmf(shape: Sequence[int], m: int, n: int, q: float) -> float:
    """log P(RSK shape = shape) for an M x N matrix of i.i.d. geometric(q) entries."""
    if not 0.0 < q < 1.0:
        raise ValidationError(f"q must lie in (0, 1), got {q}")
    parts = as_partition(shape)
    if len(parts) > n:
        raise ValidationError(f"shape {parts} has more than {n} rows")
    count = l_count(parts, m, n)
    if count == 0:
        return -math.inf
    size = sum(parts)
    return m * n * math.log1p(-q) + (size * math.log(q) if size else 0.0) + math.log(count)


def partitions(total: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(total - first, rest_parts, first):
            yield (first, *rest)
