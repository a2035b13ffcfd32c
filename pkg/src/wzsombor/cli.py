"""Command-line front end.

    wzsombor analyze 18 --json
    wzsombor sweep --from 4 --to 100 --audit --no-timestamp
    wzsombor export 18 --kind dot --out wzd18.dot

Exit codes: 0 success, 2 usage error, 3 guard refusal, 4 numeric failure.
Relative ``--out`` paths resolve against ``$WZSOMBOR_OUTPUT_DIR`` when set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .analysis import METHODS, SPECTRA, AnalysisRecord, analyze
from .errors import ConvergenceError, GuardError, NotApplicableError
from .numtheory import is_prime
from .spectral import sombor_matrix
from .structure import build_compressed, expand, to_dot

OUTPUT_DIR_ENV = "WZSOMBOR_OUTPUT_DIR"
EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_NUMERIC = 0, 2, 3, 4

SWEEP_COLUMNS = [
    "n",
    "N",
    "edges",
    "so_direct",
    "so_formula",
    "formula_case",
    "rel_delta",
    "energy",
    "lower_bound",
    "spectrum_match",
    "audit_flag_count",
    "error",
]


def fmt_real(x: float | None) -> str:
    """17 significant digits, locale independent."""
    return "" if x is None else format(float(x), ".17g")


def _resolve_out(path: str) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, GuardError):
        return EXIT_GUARD
    if isinstance(exc, (ConvergenceError, ArithmeticError, AssertionError)):
        return EXIT_NUMERIC
    return EXIT_USAGE


def _report_error(exc: BaseException, as_json: bool) -> int:
    code = _exit_code(exc)
    if as_json:
        print(json.dumps({"error": {"code": code, "type": type(exc).__name__, "message": str(exc)}}))
    else:
        print(f"error: {exc}", file=sys.stderr)
    return code


def format_text(rec: AnalysisRecord) -> str:
    lines = [
        f"n = {rec.n}  factorization = {rec.factorization}",
        f"vertices = {rec.num_vertices}  edges = {rec.num_edges}  trivial = {rec.trivial}",
    ]
    for c in rec.classes:
        lines.append(f"  class d={c['divisor']}: size {c['size']}, {c['kind']}, degree {c['degree']}")
    idx = rec.index
    lines.append(f"SO direct = {fmt_real(idx['so_direct'])}  compressed = {fmt_real(idx['so_compressed'])}")
    if idx["so_formula"] is not None:
        lines.append(
            f"SO formula ({idx['formula_case']}) = {fmt_real(idx['so_formula'])}"
            f"  rel delta = {idx['rel_delta_formula']:.3e}"
        )
    if rec.oracle_match is not None:
        lines.append(f"oracle match = {rec.oracle_match}")
    if rec.spectrum["pairs"]:
        lines.append(f"spectrum ({rec.spectrum['source']}, match={rec.spectrum['match']}):")
        for v, m in rec.spectrum["pairs"]:
            lines.append(f"  {v:.12g} x{m}")
    if rec.energy:
        lines.append(f"energy = {rec.energy['energy']:.12g}  lower bound = {rec.energy['lower_bound']:.12g}")
    for f in rec.audit_findings:
        mark = "FLAG" if f["flagged"] else "ok"
        lines.append(
            f"  [{mark}] {f['claim_id']} {f['quantity']}: printed {f['printed_value']:.12g}"
            f" computed {f['computed_value']:.12g} delta {f['abs_delta']:.3g}"
        )
    return "\n".join(lines)


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        rec = analyze(args.n, method=args.method, spectrum=args.spectrum)
    except Exception as exc:  # noqa: BLE001
        return _report_error(exc, args.json)
    print(rec.to_json() if args.json else format_text(rec))
    return EXIT_OK


def sweep_row(n: int, method: str | None, spectrum: str | None, audit: bool) -> dict:
    try:
        rec = analyze(n, method=method, spectrum=spectrum)
    except Exception as exc:  # noqa: BLE001
        return {"n": n, "error": f"{type(exc).__name__}: {exc}"}
    idx = rec.index
    return {
        "n": n,
        "N": rec.num_vertices,
        "edges": rec.num_edges,
        "so_direct": fmt_real(idx["so_direct"]),
        "so_formula": fmt_real(idx["so_formula"]),
        "formula_case": idx["formula_case"],
        "rel_delta": fmt_real(idx["rel_delta_formula"]),
        "energy": fmt_real(rec.energy["energy"]),
        "lower_bound": fmt_real(rec.energy["lower_bound"]),
        "spectrum_match": "" if rec.spectrum["match"] is None else str(rec.spectrum["match"]).lower(),
        "audit_flag_count": rec.audit_flag_count if audit else "",
        "error": "",
    }


def run_sweep(
    start: int,
    stop: int,
    *,
    method: str | None = None,
    spectrum: str | None = None,
    audit: bool = False,
    timestamp: bool = True,
    workers: int = 1,
) -> str:
    buf = io.StringIO()
    if timestamp:
        buf.write(f"# generated {datetime.now(timezone.utc).isoformat()}\n")
    ns = list(range(start, stop + 1))
    composite = [n for n in ns if not is_prime(n)]
    args = [(n, method, spectrum, audit) for n in composite]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = dict(zip(composite, pool.map(sweep_row, *zip(*args)))) if args else {}
    else:
        rows = {a[0]: sweep_row(*a) for a in args}
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for n in ns:
        if n in rows:
            writer.writerow(rows[n])
        else:
            buf.write(f"# n={n} is prime, skipped\n")
    return buf.getvalue()


def cmd_sweep(args: argparse.Namespace) -> int:
    if not 2 <= args.start <= args.stop:
        return _report_error(ValueError("need 2 <= --from <= --to"), args.json)
    text = run_sweep(
        args.start,
        args.stop,
        method=args.method,
        spectrum=args.spectrum,
        audit=args.audit,
        timestamp=not args.no_timestamp,
        workers=args.workers,
    )
    if args.out:
        out = _resolve_out(args.out)
        try:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(text, encoding="utf-8")
        except OSError as exc:
            return _report_error(OSError(f"cannot write {out}: {exc}"), args.json)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def matrix_triplets(n: int) -> str:
    """Upper-triangle triplets ``i j value`` after an ``order count`` header."""
    mat = sombor_matrix(expand(build_compressed(n)))
    iu, ju = np.nonzero(np.triu(mat.entries, 1))
    lines = [f"{mat.order} {len(iu)}"]
    lines += [f"{i} {j} {fmt_real(mat.entries[i, j])}" for i, j in zip(iu.tolist(), ju.tolist())]
    return "\n".join(lines) + "\n"


def cmd_export(args: argparse.Namespace) -> int:
    try:
        if args.n < 2 or is_prime(args.n):
            raise NotApplicableError(f"n={args.n} must be composite")
        text = to_dot(build_compressed(args.n)) if args.kind == "dot" else matrix_triplets(args.n)
    except Exception as exc:  # noqa: BLE001
        return _report_error(exc, args.json)
    out = _resolve_out(args.out or f"wzd_{args.n}.{'dot' if args.kind == 'dot' else 'txt'}")
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        return _report_error(OSError(f"cannot write {out}: {exc}"), args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--method", choices=METHODS, default=None)
    common.add_argument("--spectrum", choices=SPECTRA, default=None)

    ap = argparse.ArgumentParser(prog="wzsombor", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full analysis of one n")
    a.add_argument("n", type=int)
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", parents=[common], help="CSV over a range of n")
    s.add_argument("--from", dest="start", type=int, required=True)
    s.add_argument("--to", dest="stop", type=int, required=True)
    s.add_argument("--audit", action="store_true", help="fill audit_flag_count")
    s.add_argument("--out", default=None)
    s.add_argument("--no-timestamp", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sweep)

    e = sub.add_parser("export", parents=[common], help="DOT graph or matrix triplets")
    e.add_argument("n", type=int)
    e.add_argument("--kind", choices=("dot", "matrix"), required=True)
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_export)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
