"""Frame and matrix documents.

The canonical format is JSON with a fixed key order and one frame vector per
line. Floats are written with ``repr`` (shortest round-trip decimal), so a
parse/serialize cycle is bit-exact. Real entries are bare numbers; complex
entries are ``[re, im]`` pairs (``[re]`` is read as real).

CSV is accepted for interop: d rows by n columns, complex entries as ``a+bi``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from kangle.frame import Frame

FRAME_FORMAT = "kangle-frame"
MATRIX_FORMAT = "kangle-matrix"
VERSION = 1


class DocumentError(ValueError):
    """Malformed frame or matrix document."""


@dataclass
class FrameDocument:
    field: str
    d: int
    n: int
    vectors: np.ndarray  # n x d, one vector per row
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.field not in ("real", "complex"):
            raise DocumentError(f"field must be 'real' or 'complex', got {self.field!r}")
        dtype = np.complex128 if self.field == "complex" else np.float64
        vecs = np.asarray(self.vectors)
        if self.field == "real" and np.iscomplexobj(vecs):
            if np.any(vecs.imag != 0):
                raise DocumentError("real document has entries with nonzero imaginary part")
            vecs = vecs.real
        vecs = np.asarray(vecs, dtype=dtype)
        if vecs.shape != (self.n, self.d):
            raise DocumentError(f"expected {self.n} vectors of length {self.d}, got shape {vecs.shape}")
        if not np.all(np.isfinite(vecs)):
            raise DocumentError("document contains non-finite entries")
        self.vectors = vecs

    @classmethod
    def from_frame(cls, frame: Frame, metadata=None) -> "FrameDocument":
        meta = dict(frame.metadata)
        meta.update(metadata or {})
        return cls(frame.field, frame.d, frame.n, np.array(frame.vectors), meta)

    def to_frame(self) -> Frame:
        return Frame.from_vectors(self.vectors, self.metadata)


def _entry(z, complex_: bool):
    if complex_:
        return [float(z.real), float(z.imag)]
    return float(z)


def serialize(doc: FrameDocument) -> str:
    complex_ = doc.field == "complex"
    head = [
        ("format", FRAME_FORMAT),
        ("version", VERSION),
        ("field", doc.field),
        ("d", doc.d),
        ("n", doc.n),
        ("metadata", doc.metadata),
    ]
    lines = ["{"]
    for key, value in head:
        lines.append(f"  {json.dumps(key)}: {json.dumps(value, sort_keys=True, allow_nan=False)},")
    rows = [
        "    " + json.dumps([_entry(z, complex_) for z in row], allow_nan=False) for row in doc.vectors
    ]
    lines.append('  "vectors": [')
    if rows:
        lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_entry(raw, where: str) -> complex:
    if isinstance(raw, bool):
        raise DocumentError(f"{where}: boolean is not a number")
    if isinstance(raw, (int, float)):
        return complex(float(raw), 0.0)
    if isinstance(raw, list) and len(raw) in (1, 2) and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw
    ):
        return complex(float(raw[0]), float(raw[1]) if len(raw) == 2 else 0.0)
    raise DocumentError(f"{where}: expected a number or [re, im] pair, got {raw!r}")


def _parse_grid(rows, n_rows: int, n_cols: int, what: str) -> np.ndarray:
    if not isinstance(rows, list) or len(rows) != n_rows:
        raise DocumentError(f"expected {n_rows} {what}, got {len(rows) if isinstance(rows, list) else rows!r}")
    out = np.empty((n_rows, n_cols), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n_cols:
            raise DocumentError(f"{what} {i} must have {n_cols} entries")
        for j, raw in enumerate(row):
            out[i, j] = _parse_entry(raw, f"{what} {i}, entry {j}")
    return out


def parse(text: str) -> FrameDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or data.get("format") != FRAME_FORMAT:
        raise DocumentError(f"not a {FRAME_FORMAT} document")
    try:
        fld, d, n = data["field"], int(data["d"]), int(data["n"])
        vectors = data["vectors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"missing or invalid header field: {exc}") from exc
    if d < 1 or n < 0:
        raise DocumentError(f"invalid dimensions d={d}, n={n}")
    grid = _parse_grid(vectors, n, d, "vector")
    return FrameDocument(fld, d, n, grid, dict(data.get("metadata") or {}))


def parse_complex_token(token: str) -> complex:
    """Parse ``3``, ``-2.5``, ``i``, ``-i``, ``1+2i``, ``0.5-0.25i``."""
    tok = token.strip().replace(" ", "")
    if not tok:
        raise DocumentError("empty numeric token")
    try:
        if tok.endswith(("i", "j")):
            body = tok[:-1]
            if body in ("", "+", "-") or body[-1] in "+-":
                body += "1"
            return complex(body + "j")
        return complex(float(tok), 0.0)
    except ValueError as exc:
        raise DocumentError(f"cannot parse numeric token {token!r}") from exc


def format_complex_token(z: complex) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{float(z.real)!r}{sign}{abs(float(z.imag))!r}i"


def _read_csv_grid(text: str) -> np.ndarray:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise DocumentError("empty CSV")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DocumentError("ragged CSV rows")
    grid = np.array([[parse_complex_token(c) for c in r] for r in rows], dtype=np.complex128)
    if not np.all(np.isfinite(grid)):
        raise DocumentError("CSV contains non-finite entries")
    return grid


def _narrow(grid: np.ndarray) -> tuple[str, np.ndarray]:
    if np.any(grid.imag != 0):
        return "complex", grid
    return "real", grid.real.copy()


def parse_csv(text: str) -> FrameDocument:
    """d rows x n columns; column j is frame vector j."""
    fld, grid = _narrow(_read_csv_grid(text))
    d, n = grid.shape
    return FrameDocument(fld, d, n, grid.T.copy(), {"source": "csv"})


def to_csv(doc: FrameDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in doc.vectors.T:
        if doc.field == "complex":
            writer.writerow([format_complex_token(z) for z in row])
        else:
            writer.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


def _looks_like_csv(path: Path, text: str) -> bool:
    return path.suffix.lower() == ".csv" or not text.lstrip().startswith("{")


def load_document(path) -> FrameDocument:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return parse_csv(text) if _looks_like_csv(path, text) else parse(text)


def load_frame(path) -> Frame:
    return load_document(path).to_frame()


def save_document(doc: FrameDocument, path=None, fmt: str = "canonical") -> str:
    text = serialize(doc) if fmt == "canonical" else to_csv(doc)
    if path is not None:
        Path(path).write_text(text)
    return text


# -- square matrices (user-supplied Hadamard matrices) ----------------------


def serialize_matrix(m, metadata=None) -> str:
    m = np.asarray(m)
    complex_ = np.iscomplexobj(m)
    doc = {
        "format": MATRIX_FORMAT,
        "version": VERSION,
        "field": "complex" if complex_ else "real",
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "metadata": metadata or {},
        "entries": [[_entry(z, complex_) for z in row] for row in m],
    }
    return json.dumps(doc, indent=1, allow_nan=False) + "\n"


def load_matrix(path) -> np.ndarray:
    """Read a matrix from a canonical matrix document or a CSV grid."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    if _looks_like_csv(path, text):
        return _narrow(_read_csv_grid(text))[1]
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or data.get("format") != MATRIX_FORMAT:
        raise DocumentError(f"not a {MATRIX_FORMAT} document")
    try:
        rows, cols = int(data["rows"]), int(data["cols"])
        grid = _parse_grid(data["entries"], rows, cols, "row")
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"invalid matrix document: {exc}") from exc
    if data.get("field") == "complex":
        return grid
    fld, out = _narrow(grid)
    if fld != "real":
        raise DocumentError("real matrix document has complex entries")
    return out
