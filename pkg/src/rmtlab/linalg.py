"""Hermitian eigenvalues without LAPACK.

A complex Hermitian matrix is reduced to a real symmetric tridiagonal one by
Householder reflections (the sub-diagonal phases are dropped, which is a
diagonal unitary similarity), then the tridiagonal eigenvalues are found with
implicit-shift QL.
"""

from __future__ import annotations

import math

import numpy as np

from rmtlab.errors import ConvergenceError, ValidationError

EPS = np.finfo(float).eps
MAX_SWEEPS = 60
HERMITIAN_ATOL = 1e-12


def as_hermitian(h, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Validate ``h`` and return it as a complex array, exactly conjugate-symmetric.

    The symmetry tolerance is relative to ``1 + max|h_ij|`` so that Gram
    products like ``A @ A.conj().T`` with large entries pass.
    """
    a = np.asarray(h)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValidationError(f"expected a non-empty square matrix, got shape {a.shape}")
    a = a.astype(complex)
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix has non-finite entries")
    scale = 1.0 + float(np.max(np.abs(a)))
    if np.max(np.abs(a - a.conj().T)) > atol * scale:
        raise ValidationError("matrix is not Hermitian")
    return 0.5 * (a + a.conj().T)


def tridiagonalize(h) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(d, e)``: diagonal and non-negative off-diagonal of a real
    symmetric tridiagonal matrix unitarily similar to ``h``."""
    a = as_hermitian(h).copy()
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm = math.sqrt(float(np.sum(x.real**2 + x.imag**2)))
        if norm == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x
        v[0] += phase * norm
        v /= math.sqrt(float(np.sum(v.real**2 + v.imag**2)))
        # H = I - 2 v v*, applied as H A H on the trailing block
        a[k + 1:, :] -= 2.0 * np.outer(v, v.conj() @ a[k + 1:, :])
        a[:, k + 1:] -= 2.0 * np.outer(a[:, k + 1:] @ v, v.conj())
    d = a.diagonal().real.copy()
    e = np.abs(a.diagonal(-1))
    return d, e


def tridiagonal_eigenvalues(d, e) -> np.ndarray:
    """Eigenvalues of the symmetric tridiagonal matrix (d, e), ascending.

    Implicit QL with Wilkinson-style shifts. ``e[i]`` couples ``d[i]`` and
    ``d[i+1]``.
    """
    d = [float(x) for x in d]
    n = len(d)
    e = [float(x) for x in e] + [0.0]
    if len(e) != n:
        raise ValidationError("off-diagonal must have length len(d) - 1")
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= EPS * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > MAX_SWEEPS:
                raise ConvergenceError(f"eigenvalue {l} did not converge in {MAX_SWEEPS} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.array(sorted(d))


def eigenvalues_sorted(h) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix in ascending order."""
    d, e = tridiagonalize(h)
    return tridiagonal_eigenvalues(d, e)


def eigenvalues_batch(stack) -> np.ndarray:
    """Apply :func:`eigenvalues_sorted` to each matrix of a ``(B, n, n)`` stack."""
    stack = np.asarray(stack)
    if stack.ndim != 3:
        raise ValidationError(f"expected a (B, n, n) stack, got shape {stack.shape}")
    out = np.empty(stack.shape[:2])
    for i, h in enumerate(stack):
        out[i] = eigenvalues_sorted(h)
    return out


def sum_top_k(s, k: int) -> float:
    """Sum of the ``k`` largest values of an ascending spectrum."""
    s = np.asarray(s, dtype=float)
    if s.ndim != 1:
        raise ValidationError("spectrum must be one-dimensional")
    if not 1 <= k <= s.size:
        raise ValidationError(f"k={k} out of range 1..{s.size}")
    return float(np.sum(s[s.size - k:]))
