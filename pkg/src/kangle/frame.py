from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from kangle.linalg import as_matrix, conj_transpose, field_of, matmul


@dataclass(frozen=True)
class Frame:
    """A finite frame stored as a d x N matrix whose columns are the vectors.

    Constructions in this package always return unit-normed frames with
    ``d <= N``; the container itself only insists on a finite 2-D array so
    that arbitrary imported frames can be certified (and found wanting).
    """

    matrix: np.ndarray
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.dtype.kind not in "fc":
            m = m.astype(np.float64)
        m = np.array(m, copy=True)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_vectors(cls, vectors, metadata=None) -> "Frame":
        """Build from an N x d array of row vectors."""
        rows = as_matrix(vectors)
        return cls(np.ascontiguousarray(rows.T), dict(metadata or {}))

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @property
    def field(self) -> str:
        return field_of(self.matrix)

    @property
    def vectors(self) -> np.ndarray:
        """N x d array, one frame vector per row."""
        return self.matrix.T

    def gram(self) -> np.ndarray:
        return matmul(conj_transpose(self.matrix), self.matrix)

    def frame_operator(self) -> np.ndarray:
        return matmul(self.matrix, conj_transpose(self.matrix))

    def norms(self) -> np.ndarray:
        return np.sqrt(np.sum(np.abs(self.matrix) ** 2, axis=0))
