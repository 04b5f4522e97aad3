"""k-angle tight frames from normalized subset sums of the simplex ETF.

Starting from the d+1 simplex vectors ``f_j`` in R^d (``<f_i, f_j> = -1/d``),
each k-subset ``L`` of {0, ..., d} gives ``g_L = sum_{j in L} f_j`` normalized.
The C(d+1, k) vectors form a unit-normed tight frame whose off-diagonal
inner products depend only on ``l = |L_i & L_j|``, so at most k moduli occur.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from kangle.etf import simplex_etf
from kangle.frame import Frame
from kangle.linalg import matmul

SUBSET_CAP = 10**6


def binom(m: int, r: int) -> int:
    """Binomial coefficient with C(m, r) = 0 for r < 0 or r > m."""
    if r < 0 or m < 0 or r > m:
        return 0
    return math.comb(m, r)


@dataclass(frozen=True)
class SubsetSystem:
    """All k-subsets of {0, ..., d} in lexicographic order (0-based labels)."""

    d: int
    k: int
    subsets: tuple

    @property
    def size(self) -> int:
        return len(self.subsets)


def enumerate_subsets(d: int, k: int, cap: int = SUBSET_CAP) -> SubsetSystem:
    if not 1 <= k < d + 1:
        raise ValueError(f"need 1 <= k < d + 1, got d={d}, k={k}")
    count = math.comb(d + 1, k)
    if count > cap:
        raise ValueError(f"C({d + 1}, {k}) = {count} exceeds the subset cap {cap}")
    return SubsetSystem(d, k, tuple(itertools.combinations(range(d + 1), k)))


@dataclass(frozen=True)
class IncidenceMatrix:
    """(d+1) x C(d+1, k) binary matrix; column i is the indicator of subset i."""

    K: np.ndarray
    d: int
    k: int

    def kkt(self) -> np.ndarray:
        return matmul(self.K, self.K.T)

    def expected_kkt(self) -> np.ndarray:
        """``C(d-1, k-1) I + C(d-1, k-2) J`` in exact integers."""
        n = self.d + 1
        return binom(self.d - 1, self.k - 1) * np.eye(n, dtype=np.int64) + binom(
            self.d - 1, self.k - 2
        ) * np.ones((n, n), dtype=np.int64)


def incidence_matrix(system: SubsetSystem) -> IncidenceMatrix:
    K = np.zeros((system.d + 1, system.size), dtype=np.int64)
    for i, subset in enumerate(system.subsets):
        K[list(subset), i] = 1
    return IncidenceMatrix(K, system.d, system.k)


def subset_sums(d: int, k: int) -> tuple[SubsetSystem, np.ndarray]:
    """The unnormalized subset sums ``F K`` over the simplex frame."""
    system = enumerate_subsets(d, k)
    base = simplex_etf(d).matrix
    return system, matmul(base, incidence_matrix(system).K.astype(np.float64))


def binomial_frame(d: int, k: int) -> Frame:
    """The C(d+1, k) normalized subset sums of the simplex ETF in R^d.

    Subsets are ordered lexicographically and duplicate or antipodal
    vectors (e.g. d=3, k=2) are kept as separate frame elements.
    """
    system, sums = subset_sums(d, k)
    norms = np.sqrt(np.sum(sums * sums, axis=0))
    return Frame(sums / norms[np.newaxis, :], {"construction": "binomial", "d": d, "k": k})


def predicted_inner_product(d: int, k: int, l: int) -> float:
    """``<g_i, g_j> = (l (d+1) - k^2) / (k (d+1-k))`` for ``l = |L_i & L_j|``."""
    if not 1 <= k < d + 1:
        raise ValueError(f"need 1 <= k < d + 1, got d={d}, k={k}")
    if not 0 <= l <= k - 1:
        raise ValueError(f"overlap l must lie in [0, {k - 1}], got {l}")
    return (l * (d + 1) - k * k) / (k * (d + 1 - k))


@dataclass(frozen=True)
class FramePotential:
    """Frame potential computed two ways: the pairwise double sum and tr(G^2)."""

    double_sum: float
    trace_form: float

    @property
    def value(self) -> float:
        return self.trace_form

    def __float__(self) -> float:
        return self.value


def frame_potential(frame: Frame, rtol: float = 1e-9) -> FramePotential:
    vecs = frame.matrix
    total = 0.0
    for i in range(frame.n):
        ips = np.abs(vecs[:, i].conj() @ vecs) ** 2
        total += float(np.sum(ips))
    g = frame.gram()
    trace = float(np.real(np.trace(matmul(g, g))))
    if abs(total - trace) > rtol * max(1.0, abs(trace)):
        raise ArithmeticError(f"frame potential forms disagree: {total!r} vs {trace!r}")
    return FramePotential(total, trace)
