"""Hadamard matrices, mutually unbiased Hadamard families and the 2-angle
(and 3-angle) tight frames built as unions of orthonormal bases."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from kangle.frame import Frame
from kangle.linalg import as_matrix, conj_transpose, frobenius_distance, matmul

HADAMARD_TOL = 1e-9
UNIMODULAR_TOL = 1e-12
UNITARY_TOL = 1e-10
MAX_SYLVESTER_ORDER = 20


def check_hadamard(h, kind: str | None = None, tol: float = HADAMARD_TOL) -> np.ndarray:
    """Return ``h`` as an array after checking ``H H^* = d I`` and entry moduli.

    ``kind="real"`` additionally demands entries in {-1, +1}.
    """
    h = as_matrix(h)
    if h.dtype.kind not in "fc":
        h = h.astype(np.float64)
    d, m = h.shape
    if d != m:
        raise ValueError(f"Hadamard matrix must be square, got {h.shape}")
    if kind is None:
        kind = "complex" if np.iscomplexobj(h) else "real"
    if kind == "real":
        if np.iscomplexobj(h) or not np.all(np.isin(h, (-1.0, 1.0))):
            raise ValueError("real Hadamard entries must be exactly +1 or -1")
    elif np.any(np.abs(np.abs(h) - 1.0) > UNIMODULAR_TOL):
        raise ValueError("complex Hadamard entries must be unimodular")
    resid = frobenius_distance(matmul(h, conj_transpose(h)), d * np.eye(d))
    if resid > tol * d:
        raise ValueError(f"H H^* differs from {d} I by {resid:.3e}")
    return h


def sylvester_hadamard(n: int) -> np.ndarray:
    """2^n x 2^n real Hadamard matrix by repeated doubling ``[[H, H], [H, -H]]``."""
    if n < 0:
        raise ValueError("Sylvester order must be >= 0")
    if n > MAX_SYLVESTER_ORDER:
        raise ValueError(f"2^{n} exceeds the size cap 2^{MAX_SYLVESTER_ORDER}")
    h = np.ones((1, 1))
    for _ in range(n):
        h = np.block([[h, h], [h, -h]])
    return h


def dft_hadamard(d: int) -> np.ndarray:
    """Complex Hadamard with entries ``w^(jk)``, ``w = exp(-2 pi i / d)``."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    idx = np.arange(d)
    # reduce jk mod d first so the phase stays small and exact for d <= 2
    h = np.exp(-2j * np.pi * (np.outer(idx, idx) % d) / d)
    if d <= 2:
        h = np.round(h.real) + 0j
    return h


def reflection_basis(d: int) -> np.ndarray:
    """The symmetric orthogonal matrix ``(2/d) J - I``."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    return np.full((d, d), 2.0 / d) - np.eye(d)


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class MubFamily:
    """Mutually unbiased d x d Hadamards, verified on construction.

    Together with the standard basis the normalized members ``H_j / sqrt(d)``
    give ``len(members) + 1`` mutually unbiased bases.
    """

    members: tuple
    d: int
    tol: float = field(default=HADAMARD_TOL, compare=False)

    def __post_init__(self):
        members = tuple(check_hadamard(h, tol=self.tol) for h in self.members)
        for h in members:
            if h.shape[0] != self.d:
                raise ValueError(f"member of size {h.shape[0]} in a family of dimension {self.d}")
        root = np.sqrt(self.d)
        for j in range(len(members)):
            for k in range(j + 1, len(members)):
                cross = matmul(conj_transpose(members[j]), members[k])
                dev = float(np.max(np.abs(np.abs(cross) - root)))
                if dev > self.tol:
                    raise ValueError(f"members {j} and {k} are not unbiased (deviation {dev:.3e})")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)


def mub_family_odd_prime(p: int, n: int) -> MubFamily:
    """``n`` mutually unbiased p x p Hadamards, p an odd prime.

    Member t has entries ``w^(t l^2 + m l)`` with ``w = exp(2 pi i / p)``;
    unbiasedness of distinct members reduces to a quadratic Gauss sum of
    modulus sqrt(p). The family is re-verified numerically before return.
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if not 1 <= n <= p:
        raise ValueError(f"need 1 <= n <= p, got n={n}, p={p}")
    l = np.arange(p)[:, np.newaxis]
    m = np.arange(p)[np.newaxis, :]
    members = []
    for t in range(n):
        expo = (t * l * l + m * l) % p
        members.append(np.exp(2j * np.pi * expo / p))
    return MubFamily(tuple(members), p)


def union_frame(bases, metadata=None) -> Frame:
    """Concatenate orthonormal bases into a unit-normed tight frame with bound m."""
    blocks = [as_matrix(b) for b in bases]
    if not blocks:
        raise ValueError("need at least one basis")
    d = blocks[0].shape[0]
    for i, b in enumerate(blocks):
        if b.shape != (d, d):
            raise ValueError(f"basis {i} has shape {b.shape}, expected {(d, d)}")
        resid = frobenius_distance(matmul(conj_transpose(b), b), np.eye(d))
        if resid > UNITARY_TOL:
            raise ValueError(f"basis {i} is not unitary (residual {resid:.3e})")
    if any(np.iscomplexobj(b) for b in blocks):
        blocks = [b.astype(np.complex128) for b in blocks]
    else:
        blocks = [b.astype(np.float64) for b in blocks]
    return Frame(np.hstack(blocks), dict(metadata or {}))


def muh_frame(family: MubFamily) -> Frame:
    """Columns of ``[I, H_1/sqrt(d), ..., H_n/sqrt(d)]``: a 2-angle
    ((n+1) d, d) tight frame for ``n <= d``."""
    if not isinstance(family, MubFamily):
        raise TypeError("muh_frame expects a verified MubFamily")
    d, n = family.d, len(family)
    if n > d:
        raise ValueError(f"family size {n} exceeds the dimension {d}")
    complex_ = any(np.iscomplexobj(h) for h in family.members)
    eye = np.eye(d, dtype=np.complex128 if complex_ else np.float64)
    bases = [eye] + [h / np.sqrt(d) for h in family.members]
    return union_frame(bases, {"construction": "muh", "d": d, "n": n})
