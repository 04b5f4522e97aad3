"""Dense matrix kernels shared by every construction.

Matrices are plain 2-D numpy arrays. The field is carried by the dtype:
``float64`` for real, ``complex128`` for complex (``int64`` is allowed for
binary and incidence matrices). Nothing here ever promotes a real input to
a complex result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

HERMITIAN_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(ArithmeticError):
    """Raised when the Jacobi iteration exhausts its sweep budget."""


def field_of(a: np.ndarray) -> str:
    return "complex" if np.iscomplexobj(a) else "real"


def as_matrix(a, dtype=None) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D float64/complex128 array."""
    arr = np.asarray(a)
    if dtype is None:
        if np.iscomplexobj(arr):
            dtype = np.complex128
        elif arr.dtype.kind in "biu":
            dtype = arr.dtype if arr.dtype.kind != "b" else np.int64
        else:
            dtype = np.float64
    arr = np.asarray(arr, dtype=dtype)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {arr.shape}")
    if arr.dtype.kind in "fc" and not np.all(np.isfinite(arr)):
        raise ValueError("matrix contains NaN or Inf entries")
    return arr


@njit(cache=True)
def _matmul_kernel(a, b, out):
    n, m = a.shape
    p = b.shape[1]
    for i in range(n):
        for j in range(p):
            acc = out[i, j]
            for t in range(m):
                acc += a[i, t] * b[t, j]
            out[i, j] = acc
    return out


def matmul(a, b) -> np.ndarray:
    """Matrix product with a fixed left-to-right summation order.

    The loop order is pinned (unlike BLAS) so identical inputs give
    identical bits on every machine.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    dtype = np.result_type(a.dtype, b.dtype)
    a = np.ascontiguousarray(a, dtype=dtype)
    b = np.ascontiguousarray(b, dtype=dtype)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=dtype)
    return _matmul_kernel(a, b, out)


def conj_transpose(a) -> np.ndarray:
    a = as_matrix(a)
    if np.iscomplexobj(a):
        return np.ascontiguousarray(a.conj().T)
    return np.ascontiguousarray(a.T)


def frobenius_distance(a, b) -> float:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    diff = np.abs(a - b)
    return float(np.sqrt(np.sum(diff * diff)))


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in descending order with matching orthonormal columns."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        u = self.vectors
        return matmul(u * self.values[np.newaxis, :], conj_transpose(u))


@njit(cache=True)
def _max_offdiag(a):
    n = a.shape[0]
    m = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            v = abs(a[p, q])
            if v > m:
                m = v
    return m


@njit(cache=True)
def _jacobi(a, v, threshold, max_sweeps):
    # Cyclic Jacobi for a Hermitian (or real symmetric) matrix, in place.
    # Returns the number of sweeps used, or -1 on non-convergence.
    n = a.shape[0]
    skip = 1e-3 * threshold
    for sweep in range(max_sweeps + 1):
        if _max_offdiag(a) < threshold:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                ph = apq / mag
                cph = np.conj(ph)
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # A <- A R, with R = [[c, s], [-s*conj(ph), c*conj(ph)]] on (p, q)
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * cph * akq
                    a[k, q] = s * akp + c * cph * akq
                # A <- R^* A
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * ph * aqk
                    a[q, k] = s * apk + c * ph * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * cph * vkq
                    v[k, q] = s * vkp + c * cph * vkq
    return -1


def hermitian_eig(a, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps run until the largest off-diagonal modulus falls below
    ``tol * ||A||_F``. Eigenvalues come back sorted in descending order;
    within a degenerate cluster the basis is whatever Jacobi produced.

    Raises ``ValueError`` for non-square or non-Hermitian input and
    ``ConvergenceError`` if ``max_sweeps`` is exhausted.
    """
    a = as_matrix(a)
    if a.dtype.kind not in "fc":
        a = a.astype(np.float64)
    n, m = a.shape
    if n != m:
        raise ValueError(f"expected a square matrix, got {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    asym = float(np.max(np.abs(a - conj_transpose(a)))) if a.size else 0.0
    if asym > HERMITIAN_TOL * scale:
        raise ValueError(f"matrix is not Hermitian (max |A - A*| = {asym:.3e})")

    work = np.ascontiguousarray(0.5 * (a + conj_transpose(a)))
    vecs = np.eye(n, dtype=work.dtype)
    norm = float(np.sqrt(np.sum(np.abs(work) ** 2)))
    sweeps = 0
    if n > 1 and norm > 0.0:
        sweeps = _jacobi(work, vecs, tol * norm, max_sweeps)
        if sweeps < 0:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")

    values = np.real(np.diag(work)).copy()
    order = np.argsort(-values, kind="stable")
    return EigenDecomposition(values[order], np.ascontiguousarray(vecs[:, order]), sweeps)
