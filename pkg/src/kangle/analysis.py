"""Certificates for frames: tightness, Welch bound, angle spectrum, frame
potential, and the graph / association-scheme structure of real Gram
matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from kangle.binomial import frame_potential
from kangle.frame import Frame
from kangle.linalg import as_matrix, frobenius_distance, matmul

CLUSTER_TOL = 1e-9
DEFAULT_TOL = 1e-9


def welch_bound(n: int, d: int) -> float:
    """Lower bound ``sqrt((N - d) / (d (N - 1)))`` on the coherence of N unit vectors in dimension d."""
    if d < 1 or n < d:
        raise ValueError(f"Welch bound needs N >= d >= 1, got N={n}, d={d}")
    if n == d:
        return 0.0
    return math.sqrt((n - d) / (d * (n - 1)))


def max_equiangular_lines(d: int, field: str) -> int:
    """Gerzon-type upper bound: d(d+1)/2 lines in R^d, d^2 in C^d."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if field == "real":
        return d * (d + 1) // 2
    if field == "complex":
        return d * d
    raise ValueError(f"unknown field {field!r}")


def _offdiag(g: np.ndarray) -> np.ndarray:
    iu = np.triu_indices(g.shape[0], k=1)
    return g[iu]


def coherence(frame: Frame) -> float:
    if frame.n < 2:
        raise ValueError("coherence needs at least two vectors")
    return float(np.max(np.abs(_offdiag(frame.gram()))))


class Tightness(NamedTuple):
    is_tight: bool
    frame_bound: float
    residual: float
    tol: float


def check_tight(frame: Frame, tol: float = DEFAULT_TOL) -> Tightness:
    """Compare ``F F^*`` with ``(tr(F F^*) / d) I``; the test is relative to the bound."""
    s = frame.frame_operator()
    bound = float(np.real(np.trace(s))) / frame.d
    resid = frobenius_distance(s, bound * np.eye(frame.d))
    return Tightness(bool(bound > 0 and resid <= tol * bound), bound, resid, tol)


def cluster_values(values: np.ndarray, tol: float) -> list[np.ndarray]:
    """Single-linkage clusters of a 1-D array: a new cluster starts whenever
    the gap to the previous sorted value exceeds ``tol``."""
    order = np.argsort(values, kind="stable")
    clusters: list[list[int]] = []
    prev = None
    for idx in order:
        v = values[idx]
        if prev is None or v - prev > tol:
            clusters.append([])
        clusters[-1].append(int(idx))
        prev = v
    return [np.array(c, dtype=np.int64) for c in clusters]


@dataclass(frozen=True)
class AngleSpectrum:
    """Distinct off-diagonal Gram moduli (ascending) with pair counts."""

    values: tuple
    multiplicities: tuple
    tol: float

    @property
    def k_hat(self) -> int:
        return len(self.values)

    def to_dict(self) -> dict:
        return {
            "values": list(self.values),
            "multiplicities": list(self.multiplicities),
            "tol": self.tol,
            "k_hat": self.k_hat,
        }


def spectrum_of_gram(g: np.ndarray, tol: float = CLUSTER_TOL) -> AngleSpectrum:
    moduli = np.abs(_offdiag(g))
    clusters = cluster_values(moduli, tol)
    values = tuple(float(np.mean(moduli[c])) for c in clusters)
    counts = tuple(int(c.size) for c in clusters)
    return AngleSpectrum(values, counts, tol)


def angle_spectrum(frame: Frame, tol: float = CLUSTER_TOL) -> AngleSpectrum:
    if frame.n < 2:
        raise ValueError("angle spectrum needs at least two vectors")
    return spectrum_of_gram(frame.gram(), tol)


@dataclass(frozen=True)
class CertificationReport:
    n: int
    d: int
    field: str
    tol: float
    is_unit_normed: bool
    norm_deviation: float
    is_tight: bool
    frame_bound: float
    tightness_residual: float
    coherence: float
    welch_bound: float | None
    attains_welch: bool
    welch_gap: float | None
    spectrum: AngleSpectrum
    frame_potential: float
    frame_potential_double_sum: float
    frame_potential_minimum: float
    max_equiangular_lines: int
    notes: tuple = field(default=())

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "d": self.d,
            "field": self.field,
            "tol": self.tol,
            "is_unit_normed": self.is_unit_normed,
            "norm_deviation": self.norm_deviation,
            "is_tight": self.is_tight,
            "frame_bound": self.frame_bound,
            "tightness_residual": self.tightness_residual,
            "coherence": self.coherence,
            "welch_bound": self.welch_bound,
            "attains_welch": self.attains_welch,
            "welch_gap": self.welch_gap,
            "spectrum": self.spectrum.to_dict(),
            "k_hat": self.spectrum.k_hat,
            "frame_potential": self.frame_potential,
            "frame_potential_double_sum": self.frame_potential_double_sum,
            "frame_potential_minimum": self.frame_potential_minimum,
            "max_equiangular_lines": self.max_equiangular_lines,
            "notes": list(self.notes),
        }
        return out

    def to_text(self) -> str:
        def yn(flag):
            return "yes" if flag else "no"

        welch = "n/a" if self.welch_bound is None else f"{self.welch_bound:.12g}"
        moduli = ", ".join(
            f"{v:.12g} (x{m})" for v, m in zip(self.spectrum.values, self.spectrum.multiplicities)
        )
        rows = [
            ("frame", f"({self.n}, {self.d}) {self.field}"),
            ("unit-normed", f"{yn(self.is_unit_normed)}  [max | |f_i| - 1 | = {self.norm_deviation:.3e}]"),
            ("tight", f"{yn(self.is_tight)}  [bound {self.frame_bound:.12g}, residual {self.tightness_residual:.3e}]"),
            ("coherence", f"{self.coherence:.12g}"),
            ("welch bound", welch),
            ("attains welch", yn(self.attains_welch)),
            ("k_hat", str(self.spectrum.k_hat)),
            ("moduli", moduli or "-"),
            ("frame potential", f"{self.frame_potential:.12g}  [minimum N^2/d = {self.frame_potential_minimum:.12g}]"),
            ("max equiangular lines", str(self.max_equiangular_lines)),
        ]
        width = max(len(k) for k, _ in rows)
        lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
        lines += [f"note: {note}" for note in self.notes]
        return "\n".join(lines)


def certify(frame: Frame, tol: float = DEFAULT_TOL, cluster_tol: float | None = None) -> CertificationReport:
    cluster_tol = tol if cluster_tol is None else cluster_tol
    g = frame.gram()
    n, d = frame.n, frame.d
    notes = []

    norm_dev = float(np.max(np.abs(frame.norms() - 1.0))) if n else 0.0
    unit = norm_dev <= tol
    tight = check_tight(frame, tol)

    if n >= 2:
        coh = float(np.max(np.abs(_offdiag(g))))
        spectrum = spectrum_of_gram(g, cluster_tol)
    else:
        coh = 0.0
        spectrum = AngleSpectrum((), (), cluster_tol)

    if n >= d:
        wb = welch_bound(n, d)
        gap = coh - wb
        attains = abs(gap) <= tol
        if gap < -tol and unit:
            notes.append("coherence below the Welch bound: numerical inconsistency")
    else:
        wb, gap, attains = None, None, False
        notes.append(f"N = {n} < d = {d}: the vectors cannot span")

    fp = frame_potential(frame)
    fp_min = n * n / d

    if n >= 2:
        off = _offdiag(g)
        mod = np.abs(off)
        near_one = np.abs(mod - 1.0) <= cluster_tol
        antipodal = int(np.sum(near_one & (np.real(off) < 0)))
        parallel = int(np.sum(near_one)) - antipodal
        if antipodal:
            notes.append(f"{antipodal} antipodal pair(s) (<f_i, f_j> = -1)")
        if parallel:
            notes.append(f"{parallel} repeated pair(s) (|<f_i, f_j>| = 1, not antipodal)")

    lines_cap = max_equiangular_lines(d, frame.field)
    if spectrum.k_hat == 1 and spectrum.values[0] > cluster_tol and n > lines_cap:
        notes.append(f"equiangular with N = {n} > {lines_cap} lines: impossible, check the input")

    return CertificationReport(
        n=n,
        d=d,
        field=frame.field,
        tol=tol,
        is_unit_normed=unit,
        norm_deviation=norm_dev,
        is_tight=tight.is_tight,
        frame_bound=tight.frame_bound,
        tightness_residual=tight.residual,
        coherence=coh,
        welch_bound=wb,
        attains_welch=attains,
        welch_gap=gap,
        spectrum=spectrum,
        frame_potential=fp.trace_form,
        frame_potential_double_sum=fp.double_sum,
        frame_potential_minimum=fp_min,
        max_equiangular_lines=lines_cap,
        notes=tuple(notes),
    )


# -- Gram decomposition and graph structure (real Gram matrices only) -------


def _real_gram(g, tol: float) -> np.ndarray:
    g = as_matrix(g)
    if np.iscomplexobj(g):
        raise ValueError("graph analysis is defined for real Gram matrices only")
    n, m = g.shape
    if n != m:
        raise ValueError(f"Gram matrix must be square, got {g.shape}")
    if np.any(np.abs(np.diag(g) - 1.0) > tol):
        raise ValueError("Gram matrix must have unit diagonal")
    if np.any(np.abs(g - g.T) > tol):
        raise ValueError("Gram matrix must be symmetric")
    return g.astype(np.float64)


@dataclass(frozen=True)
class GramDecomposition:
    """``G = I + sum c_i Q_i`` with disjoint zero-diagonal symmetric binary ``Q_i``.

    ``by="value"`` groups off-diagonal entries by signed value; ``by="modulus"``
    groups by absolute value, in which case the identity holds for ``|G|``.
    Entries that cluster at zero form ``zero_class`` rather than a component.
    """

    coefficients: tuple
    components: tuple
    zero_class: np.ndarray
    by: str
    tol: float

    @property
    def k(self) -> int:
        return len(self.coefficients)

    @property
    def size(self) -> int:
        return self.zero_class.shape[0]

    def recompose(self) -> np.ndarray:
        out = np.eye(self.size)
        for c, q in zip(self.coefficients, self.components):
            out = out + c * q
        return out


def decompose_gram(g, tol: float = CLUSTER_TOL, by: str = "value") -> GramDecomposition:
    if by not in ("value", "modulus"):
        raise ValueError(f"by must be 'value' or 'modulus', got {by!r}")
    g = _real_gram(g, tol)
    n = g.shape[0]
    iu = np.triu_indices(n, k=1)
    vals = g[iu] if by == "value" else np.abs(g[iu])
    coeffs, comps = [], []
    zero = np.zeros((n, n), dtype=np.int64)
    for cluster in cluster_values(vals, tol):
        rep = float(np.mean(vals[cluster]))
        q = np.zeros((n, n), dtype=np.int64)
        q[iu[0][cluster], iu[1][cluster]] = 1
        q = q + q.T
        if abs(rep) <= tol:
            zero = zero + q
        else:
            coeffs.append(rep)
            comps.append(q)
    return GramDecomposition(tuple(coeffs), tuple(comps), zero, by, tol)


def seidel_from_gram(g, alpha: float, tol: float = CLUSTER_TOL) -> np.ndarray:
    """Seidel matrix ``(G - I) / alpha`` of a real equiangular Gram matrix, entries snapped to +-1."""
    g = _real_gram(g, tol)
    off = _offdiag(g)
    if off.size and np.max(np.abs(np.abs(off) - alpha)) > tol:
        raise ValueError(f"Gram matrix is not equiangular with alpha = {alpha!r}")
    q = np.sign(g - np.eye(g.shape[0]))
    np.fill_diagonal(q, 0.0)
    return q


class Regularity(NamedTuple):
    is_regular: bool
    degree: int | None


def is_regular(q) -> Regularity:
    """Whether a simple graph's adjacency matrix has constant row sums."""
    q = np.asarray(q)
    if q.ndim != 2 or q.shape[0] != q.shape[1]:
        raise ValueError("adjacency matrix must be square")
    if not np.all(np.isin(q, (0, 1))):
        raise ValueError("adjacency matrix must be binary")
    if np.any(np.diag(q) != 0):
        raise ValueError("adjacency matrix must have zero diagonal")
    if np.any(q != q.T):
        raise ValueError("adjacency matrix must be symmetric")
    sums = q.astype(np.int64).sum(axis=1)
    if sums.size == 0 or np.all(sums == sums[0]):
        return Regularity(True, int(sums[0]) if sums.size else 0)
    return Regularity(False, None)


def all_ones_eigenvector(g, tol: float = DEFAULT_TOL, return_eigenvalue: bool = False):
    """Whether ``u = [1, ..., 1]`` satisfies ``G u = lambda u``, with
    ``lambda = u^T G u / N``."""
    g = as_matrix(g)
    n = g.shape[0]
    if g.shape != (n, n):
        raise ValueError("matrix must be square")
    u = np.ones((n, 1))
    gu = matmul(g, u.astype(g.dtype))[:, 0]
    lam = float(np.real(np.sum(gu))) / n if n else 0.0
    ok = bool(np.max(np.abs(gu - lam)) <= tol * max(1.0, abs(lam))) if n else True
    if return_eigenvalue:
        return ok, lam
    return ok


@dataclass(frozen=True)
class SchemeReport:
    """Commutation of the classes {Q_0, Q_1, ..., Q_k}.

    ``commutes`` is the pairwise-commutation criterion. ``closed`` is the
    stricter Bose-Mesner requirement that every product lies in
    span{I, Q_0, ..., Q_k}; it is informational only.
    """

    labels: tuple
    commutation: dict
    closure: dict
    tol: float

    @property
    def commutes(self) -> bool:
        return all(r <= self.tol for r in self.commutation.values())

    @property
    def closed(self) -> bool:
        return all(r <= self.tol for r in self.closure.values())

    def to_dict(self) -> dict:
        return {
            "classes": list(self.labels),
            "commutes": self.commutes,
            "closed_under_products": self.closed,
            "commutation_residuals": {f"{a},{b}": r for (a, b), r in self.commutation.items()},
            "closure_residuals": {f"{a},{b}": r for (a, b), r in self.closure.items()},
            "tol": self.tol,
        }


def scheme_classes(dec: GramDecomposition) -> tuple[list[str], list[np.ndarray]]:
    labels, mats = [], []
    if np.any(dec.zero_class):
        labels.append("Q0")
        mats.append(dec.zero_class)
    for i, q in enumerate(dec.components, start=1):
        labels.append(f"Q{i}")
        mats.append(q)
    return labels, mats


def check_association_scheme(dec: GramDecomposition, tol: float = DEFAULT_TOL) -> SchemeReport:
    labels, mats = scheme_classes(dec)
    n = dec.size
    eye = np.eye(n, dtype=np.int64)
    supports = [eye] + mats
    commutation, closure = {}, {}
    for i in range(len(mats)):
        for j in range(i, len(mats)):
            ab = matmul(mats[i], mats[j])
            if i != j:
                ba = matmul(mats[j], mats[i])
                commutation[(labels[i], labels[j])] = frobenius_distance(ab, ba)
            proj = np.zeros((n, n))
            for s in supports:
                mask = s.astype(bool)
                if mask.any():
                    proj[mask] = ab[mask].mean()
            closure[(labels[i], labels[j])] = frobenius_distance(ab.astype(np.float64), proj)
    return SchemeReport(tuple(labels), commutation, closure, tol)


@dataclass(frozen=True)
class GraphReport:
    decomposition: GramDecomposition
    regularity: tuple
    ones_eigenvector: bool
    ones_eigenvalue: float
    scheme: SchemeReport

    @property
    def all_regular(self) -> bool:
        return all(r.is_regular for r in self.regularity)

    @property
    def regular_iff_ones(self) -> bool:
        """Whether the two sides of the regular-graph / all-ones-eigenvector
        equivalence agree on this instance."""
        return self.all_regular == self.ones_eigenvector

    def to_dict(self) -> dict:
        dec = self.decomposition
        return {
            "grouping": dec.by,
            "coefficients": list(dec.coefficients),
            "components": [
                {"coefficient": c, "regular": r.is_regular, "degree": r.degree, "edges": int(q.sum()) // 2}
                for c, q, r in zip(dec.coefficients, dec.components, self.regularity)
            ],
            "zero_class_edges": int(dec.zero_class.sum()) // 2,
            "all_regular": self.all_regular,
            "ones_eigenvector": self.ones_eigenvector,
            "ones_eigenvalue": self.ones_eigenvalue,
            "regular_iff_ones_eigenvector": self.regular_iff_ones,
            "association_scheme": self.scheme.to_dict(),
        }


def graph_report(g, tol: float = DEFAULT_TOL, by: str = "value") -> GraphReport:
    """Decomposition, regularity and scheme checks for one grouping.

    The all-ones test runs on the matrix the decomposition rebuilds:
    ``G`` itself for ``by="value"``, ``|G|`` for ``by="modulus"``.
    """
    dec = decompose_gram(g, tol, by=by)
    reg = tuple(is_regular(q) for q in dec.components)
    target = dec.recompose() if by == "modulus" else as_matrix(g)
    ok, lam = all_ones_eigenvector(target, tol, return_eigenvalue=True)
    return GraphReport(dec, reg, ok, lam, check_association_scheme(dec, tol))
