"""Command-line front end: ``kangle construct | certify | analyze-graph | export``.

Exit codes: 0 success, 1 a ``--expect`` assertion failed, 2 invalid input
(bad parameters, unreadable or malformed documents).
"""

from __future__ import annotations

import argparse
import json
import operator
import re
import sys

import numpy as np

from kangle import __version__
from kangle.analysis import certify, graph_report
from kangle.binomial import binomial_frame
from kangle.etf import etf_fast_path, etf_via_eig, simplex_etf
from kangle.hadamard import (
    MubFamily,
    check_hadamard,
    dft_hadamard,
    mub_family_odd_prime,
    muh_frame,
    reflection_basis,
    sylvester_hadamard,
    union_frame,
)
from kangle.io import (
    DocumentError,
    FrameDocument,
    load_document,
    load_matrix,
    parse_complex_token,
    save_document,
)

CONSTRUCTIONS = (
    "etf-seed",
    "etf-fast",
    "simplex",
    "union-reflection",
    "union-hadamard",
    "muh",
    "binomial",
)


class UsageError(ValueError):
    pass


def parse_seed(text: str, field: str | None = None) -> np.ndarray:
    tokens = [t for t in text.split(",") if t.strip()]
    if not tokens:
        raise UsageError("--x needs a comma-separated seed such as 1,i,-1,-i")
    vals = np.array([parse_complex_token(t) for t in tokens])
    if field == "complex" or (field is None and np.any(vals.imag != 0)):
        return vals
    if np.any(vals.imag != 0):
        raise UsageError("--field real given but the seed has complex entries")
    return vals.real.copy()


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"construction {args.construction!r} requires --{name}")


def _power_of_two(d: int) -> int:
    if d < 1 or d & (d - 1):
        raise UsageError(f"real Hadamard via Sylvester needs d a power of two, got d={d}")
    return d.bit_length() - 1


def build(args) -> tuple:
    """Dispatch a construction; returns ``(frame, parameters)``."""
    name = args.construction
    if name in ("etf-seed", "etf-fast"):
        _require(args, "x")
        x = parse_seed(args.x, args.field)
        frame = etf_via_eig(x) if name == "etf-seed" else etf_fast_path(x)
        return frame, {"x": args.x}
    if name == "simplex":
        _require(args, "d")
        return simplex_etf(args.d), {"d": args.d}
    if name == "union-reflection":
        _require(args, "d")
        if args.d < 1:
            raise UsageError("--d must be >= 1")
        return union_frame([np.eye(args.d), reflection_basis(args.d)]), {"d": args.d}
    if name == "union-hadamard":
        if args.hadamard:
            if len(args.hadamard) != 1:
                raise UsageError("union-hadamard takes exactly one --hadamard matrix")
            h = check_hadamard(load_matrix(args.hadamard[0]))
            params = {"hadamard": args.hadamard[0]}
        else:
            _require(args, "d")
            if args.field == "complex":
                h = dft_hadamard(args.d)
            else:
                h = sylvester_hadamard(_power_of_two(args.d))
            params = {"d": args.d, "field": args.field or "real"}
        d = h.shape[0]
        eye = np.eye(d, dtype=h.dtype)
        return union_frame([eye, h / np.sqrt(d)]), params
    if name == "muh":
        if args.hadamard:
            members = tuple(load_matrix(p) for p in args.hadamard)
            family = MubFamily(members, members[0].shape[0])
            params = {"hadamard": list(args.hadamard)}
        else:
            _require(args, "p", "n")
            family = mub_family_odd_prime(args.p, args.n)
            params = {"p": args.p, "n": args.n}
        return muh_frame(family), params
    if name == "binomial":
        _require(args, "d", "k")
        return binomial_frame(args.d, args.k), {"d": args.d, "k": args.k}
    raise UsageError(f"unknown construction {name!r}")


_EXPECT_K = re.compile(r"^k\s*(<=|>=|==|=|<|>)\s*(\d+)$")
_OPS = {
    "<=": operator.le,
    ">=": operator.ge,
    "==": operator.eq,
    "=": operator.eq,
    "<": operator.lt,
    ">": operator.gt,
}


def parse_expectations(text: str) -> list:
    checks = []
    for raw in text.split(","):
        tok = raw.strip()
        if not tok:
            continue
        if tok in ("tight", "welch", "unit"):
            checks.append((tok, None, None))
            continue
        m = _EXPECT_K.match(tok)
        if not m:
            raise UsageError(f"unknown expectation {tok!r} (use tight, welch, unit, k<=N, k=N)")
        checks.append(("k", m.group(1), int(m.group(2))))
    return checks


def evaluate_expectations(report, checks) -> list[str]:
    failures = []
    for name, op, value in checks:
        if name == "tight" and not report.is_tight:
            failures.append(f"tight: residual {report.tightness_residual:.3e}")
        elif name == "welch" and not report.attains_welch:
            failures.append(f"welch: coherence {report.coherence!r} vs bound {report.welch_bound!r}")
        elif name == "unit" and not report.is_unit_normed:
            failures.append(f"unit: norm deviation {report.norm_deviation:.3e}")
        elif name == "k" and not _OPS[op](report.spectrum.k_hat, value):
            failures.append(f"k{op}{value}: k_hat = {report.spectrum.k_hat}")
    return failures


def cmd_construct(args) -> int:
    frame, params = build(args)
    meta = {"construction": args.construction, "parameters": params, "tool": f"kangle {__version__}"}
    doc = FrameDocument.from_frame(frame)
    doc.metadata = meta
    text = save_document(doc, args.out, args.format)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def cmd_certify(args) -> int:
    checks = parse_expectations(args.expect) if args.expect else []
    frame = load_document(args.input).to_frame()
    report = certify(frame, tol=args.tol, cluster_tol=args.cluster_tol)
    payload = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if args.json:
        sys.stdout.write(payload)
    else:
        print(report.to_text())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    failures = evaluate_expectations(report, checks)
    for f in failures:
        print(f"expectation failed: {f}", file=sys.stderr)
    return 1 if failures else 0


def _graph_text(rep) -> str:
    dec = rep.decomposition
    lines = [f"[{dec.by} classes]"]
    for i, (c, r) in enumerate(zip(dec.coefficients, rep.regularity), start=1):
        reg = f"regular, degree {r.degree}" if r.is_regular else "not regular"
        edges = int(dec.components[i - 1].sum()) // 2
        lines.append(f"  Q{i}: c = {c:.12g}, {edges} edges, {reg}")
    lines.append(f"  zero class: {int(dec.zero_class.sum()) // 2} edges")
    lines.append(f"  all components regular: {'yes' if rep.all_regular else 'no'}")
    lines.append(
        f"  all-ones eigenvector: {'yes' if rep.ones_eigenvector else 'no'}"
        f" (lambda = {rep.ones_eigenvalue:.12g})"
    )
    lines.append(f"  regularity agrees with all-ones eigenvector: {'yes' if rep.regular_iff_ones else 'no'}")
    scheme = rep.scheme
    lines.append(f"  classes commute (association scheme): {'pass' if scheme.commutes else 'fail'}")
    lines.append(f"  products closed in span{{I, Q0..Qk}} (strict): {'yes' if scheme.closed else 'no'}")
    return "\n".join(lines)


def cmd_analyze_graph(args) -> int:
    frame = load_document(args.input).to_frame()
    if frame.field != "real":
        raise UsageError("analyze-graph handles real frames only; graph structure is defined for real Gram matrices")
    g = frame.gram()
    views = ("value", "modulus") if args.by == "both" else (args.by,)
    reports = {by: graph_report(g, tol=args.tol, by=by) for by in views}
    if args.json:
        payload = {by: rep.to_dict() for by, rep in reports.items()}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        print(f"frame ({frame.n}, {frame.d}) real")
        for rep in reports.values():
            print(_graph_text(rep))
    return 0


def cmd_export(args) -> int:
    doc = load_document(args.input)
    text = save_document(doc, args.out, args.format)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kangle", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"kangle {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a frame and write its document")
    p.add_argument("construction", choices=CONSTRUCTIONS)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--x", help="seed, e.g. 1,1,-1 or 1,i,-1,-i or 0.6+0.8i,1")
    p.add_argument("--field", choices=("real", "complex"))
    p.add_argument("--hadamard", action="append", help="matrix file (repeatable for muh)")
    p.add_argument("--out")
    p.add_argument("--format", choices=("canonical", "csv"), default="canonical")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", help="certify a frame document")
    p.add_argument("input")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--cluster-tol", type=float, default=None)
    p.add_argument("--expect", help="comma list: tight, welch, unit, k<=N, k=N")
    p.add_argument("--json", action="store_true", help="print the machine-readable report")
    p.add_argument("--out", help="also write the JSON report here")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("analyze-graph", help="Gram decomposition and graph checks (real frames)")
    p.add_argument("input")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--by", choices=("value", "modulus", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze_graph)

    p = sub.add_parser("export", help="convert a frame document (or CSV) to another format")
    p.add_argument("input")
    p.add_argument("--format", choices=("canonical", "csv"), default="canonical")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DocumentError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
