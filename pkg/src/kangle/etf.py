"""(d+1, d) equiangular tight frames from a unimodular seed vector.

Every signature matrix of a (d+1, d) ETF has the form ``Q = I - x x^*`` with
``|x_j| = 1``. Two routes turn a seed ``x`` into frame vectors:

* ``etf_via_eig`` diagonalizes ``G = I + Q/d`` and reads the vectors off
  the rows of ``U sqrt(D)`` (zero-eigenvalue column dropped);
* ``etf_fast_path`` writes down an explicit orthogonal eigenbasis of ``G``
  and produces each vector with O(d) work.

Both give the same Gram matrix. The frames themselves agree only up to a
unitary acting on the left.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from kangle.frame import Frame
from kangle.linalg import as_matrix, conj_transpose, hermitian_eig, matmul

UNIMODULAR_TOL = 1e-12
IDENTITY_TOL = 1e-9


def seed_vector(x) -> np.ndarray:
    """Validate and normalize a seed: 1-D, length >= 2, unimodular entries."""
    arr = np.asarray(x)
    if arr.ndim != 1:
        raise ValueError(f"seed must be a vector, got shape {arr.shape}")
    if arr.size < 2:
        raise ValueError("seed must have length d + 1 >= 2")
    arr = arr.astype(np.complex128 if np.iscomplexobj(arr) else np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("seed has non-finite entries")
    dev = np.abs(np.abs(arr) - 1.0)
    if np.any(dev > UNIMODULAR_TOL):
        bad = int(np.argmax(dev))
        raise ValueError(f"seed entry {bad} = {arr[bad]!r} is not unimodular")
    return arr


def signature_from_seed(x) -> np.ndarray:
    """``Q = I - x x^*`` with the diagonal pinned to exactly zero."""
    x = seed_vector(x)
    col = x[:, np.newaxis]
    q = np.eye(x.size, dtype=x.dtype) - matmul(col, conj_transpose(col))
    np.fill_diagonal(q, 0.0)
    return q


def gram_from_signature(q, d: int) -> np.ndarray:
    q = as_matrix(q)
    if q.shape != (d + 1, d + 1):
        raise ValueError(f"signature matrix must be {(d + 1, d + 1)}, got {q.shape}")
    return np.eye(d + 1, dtype=q.dtype) + q / d


@dataclass(frozen=True)
class SignatureCheck:
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol

    def __bool__(self) -> bool:
        return self.passed


def verify_signature_identity(q, d: int, tol: float = IDENTITY_TOL) -> SignatureCheck:
    """Residual of ``Q^2 = (1 - d) Q + d I``, the quadratic identity whose
    roots are the two eigenvalues ``-d`` and ``1``."""
    q = as_matrix(q)
    if q.shape != (d + 1, d + 1):
        raise ValueError(f"signature matrix must be {(d + 1, d + 1)}, got {q.shape}")
    lhs = matmul(q, q)
    rhs = (1 - d) * q + d * np.eye(d + 1, dtype=q.dtype)
    diff = np.abs(lhs - rhs)
    return SignatureCheck(float(np.sqrt(np.sum(diff * diff))), tol)


def etf_via_eig(x, tol: float = 1e-12) -> Frame:
    """Diagonalize the Gram matrix and take the rows of ``U sqrt(D)``.

    The frame matrix is the conjugate transpose of ``U sqrt(D)`` restricted
    to its d leading columns, so that ``F^* F`` reproduces ``G`` itself
    (rather than its transpose) in the complex case.
    """
    x = seed_vector(x)
    d = x.size - 1
    g = gram_from_signature(signature_from_seed(x), d)
    eig = hermitian_eig(g, tol=tol)
    if abs(eig.values[-1]) > 1e-9:
        raise ArithmeticError(f"expected a zero eigenvalue, found {eig.values[-1]!r}")
    roots = np.sqrt(np.clip(eig.values[:d], 0.0, None))
    w = eig.vectors[:, :d] * roots[np.newaxis, :]
    return Frame(conj_transpose(w), {"construction": "etf-seed", "d": d})


def fast_path_row(x: np.ndarray, i: int) -> np.ndarray:
    """Row ``i`` of ``V = [c_1 y_1 ... c_d y_d]`` in O(d) operations.

    Column j (1-based) of V is ``c_j * [x_1/j, ..., x_j/j, -x_{j+1}, 0, ...]``
    with ``c_j = sqrt((d+1)/d) * sqrt(j/(j+1))``, so row i (0-based) is
    ``x_i`` times a fixed real profile.
    """
    d = x.size - 1
    j = np.arange(1, d + 1)
    c = np.sqrt((d + 1) / d) * np.sqrt(j / (j + 1))
    profile = np.where(j > i, c / j, 0.0)
    if i >= 1:
        profile[i - 1] = -c[i - 1]
    return x[i] * profile


def etf_fast_path(x) -> Frame:
    """(d+1, d) ETF from the closed-form eigenvectors of ``G``.

    The seed's j-th eigenvector ``y_j`` is orthogonal to ``x`` and to every
    other ``y_m`` because ``|x_m| = 1``; that holds verbatim for complex
    seeds, not only for ``x`` in {+1, -1}.
    """
    x = seed_vector(x)
    d = x.size - 1
    v = np.stack([fast_path_row(x, i) for i in range(d + 1)])
    return Frame(conj_transpose(v), {"construction": "etf-fast", "d": d})


def simplex_etf(d: int) -> Frame:
    """The regular simplex in R^d: d+1 unit vectors with pairwise inner product -1/d."""
    if d < 1:
        raise ValueError("simplex dimension must be >= 1")
    frame = etf_fast_path(np.ones(d + 1))
    return Frame(frame.matrix, {"construction": "simplex", "d": d})
