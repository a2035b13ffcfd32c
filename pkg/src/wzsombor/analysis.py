"""Per-n pipeline shared by the CLI commands."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .audit import AuditFinding, audit_index, audit_spectrum, flag_count
from .errors import NotApplicableError
from .numtheory import factorize
from .ring_oracle import ORACLE_CAP, build_dense_oracle
from .sombor_index import index_report
from .spectral import (
    MATCH_TOL,
    MATRIX_CAP,
    energy_bounds,
    frobenius_squared,
    spectra_match,
    spectrum_full,
    spectrum_theoretical,
)
from .structure import build_compressed, expand

ORACLE_DEFAULT_LIMIT = 300
METHODS = ("structural", "oracle", "both")
SPECTRA = ("full", "quotient", "both")


@dataclass
class AnalysisRecord:
    n: int
    factorization: list[list[int]]
    trivial: bool
    num_vertices: int
    num_edges: int
    classes: list[dict]
    index: dict
    spectrum: dict
    energy: dict | None
    audit_findings: list[dict] = field(default_factory=list)
    method: str = "structural"
    oracle_match: bool | None = None

    @property
    def audit_flag_count(self) -> int:
        return flag_count([AuditFinding.from_dict(f) for f in self.audit_findings])

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "factorization": self.factorization,
            "trivial": self.trivial,
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
            "classes": self.classes,
            "index": self.index,
            "spectrum": self.spectrum,
            "energy": self.energy,
            "audit_findings": self.audit_findings,
            "method": self.method,
            "oracle_match": self.oracle_match,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisRecord":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisRecord":
        return cls.from_dict(json.loads(text))


def default_method(n: int) -> str:
    return "both" if n <= ORACLE_DEFAULT_LIMIT else "structural"


def default_spectrum(order: int) -> str:
    return "both" if order <= MATRIX_CAP else "quotient"


def analyze(n: int, method: str | None = None, spectrum: str | None = None) -> AnalysisRecord:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    method = method or default_method(n)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    fac = factorize(n)
    g = build_compressed(n)
    spectrum = spectrum or default_spectrum(g.order)
    if spectrum not in SPECTRA:
        raise ValueError(f"unknown spectrum mode {spectrum!r}")

    oracle = build_dense_oracle(n) if method in ("oracle", "both") else None
    dense = None
    if method in ("structural", "both"):
        dense = expand(g)
    oracle_match = None
    if oracle is not None and dense is not None:
        oracle_match = oracle.vertices == dense.vertices and bool(np.array_equal(oracle.adjacency, dense.adjacency))
    graph = oracle if oracle is not None else dense

    index = index_report(n, dense=graph, compressed=g)
    classes = [
        {"divisor": c.divisor, "size": c.size, "kind": c.kind.value, "degree": c.degree}
        for c in g.classes
    ]
    record = AnalysisRecord(
        n=n,
        factorization=fac.as_lists(),
        trivial=g.partition.trivial,
        num_vertices=graph.order,
        num_edges=graph.num_edges(),
        classes=classes,
        index=index.to_dict(),
        spectrum={"source": None, "pairs": [], "cluster_tolerance": 0.0, "match": None, "max_gap": None},
        energy=None,
        method=method,
        oracle_match=oracle_match,
    )
    if g.partition.trivial:
        return record

    full = spectrum_full(n) if spectrum in ("full", "both") else None
    theo = spectrum_theoretical(n) if spectrum in ("quotient", "both") else None
    chosen = full if full is not None else theo
    spec_out = chosen.to_dict()
    spec_out["source"] = {"full": "full", "quotient": "theoretical", "both": "both"}[spectrum]
    spec_out["match"] = None
    spec_out["max_gap"] = None
    if full is not None and theo is not None:
        tol = MATCH_TOL * max(1.0, frobenius_squared(g) ** 0.5)
        ok, gap = spectra_match(full, theo, tol)
        spec_out["match"], spec_out["max_gap"] = ok, gap
    record.spectrum = spec_out
    record.energy = energy_bounds(n, spectrum=chosen).to_dict()

    findings = audit_index(n, index.so_direct) + audit_spectrum(g, chosen)
    record.audit_findings = [f.to_dict() for f in findings]
    return record


__all__ = ["AnalysisRecord", "NotApplicableError", "ORACLE_CAP", "analyze"]
