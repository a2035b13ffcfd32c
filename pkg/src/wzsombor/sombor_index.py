"""Sombor index: dense edge sum, class-level sum and closed forms."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NotApplicableError
from .numtheory import Factorization, factorize, totient
from .ring_oracle import DenseGraph
from .structure import CompressedGraph, build_compressed, expand

SQRT2 = math.sqrt(2.0)


class FormulaCase(str, enum.Enum):
    COMPLETE = "CompleteCase"
    GENERAL = "GeneralCase"
    PKQ = "PkQCorollary"
    PQR = "PqrCorollary"
    NOT_APPLICABLE = "NotApplicable"


@dataclass
class IndexReport:
    n: int
    so_direct: float
    so_compressed: float
    so_formula: float | None
    formula_case: FormulaCase
    rel_delta_formula: float | None
    terms: list[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "so_direct": self.so_direct,
            "so_compressed": self.so_compressed,
            "so_formula": self.so_formula,
            "formula_case": self.formula_case.value,
            "rel_delta_formula": self.rel_delta_formula,
            "terms": list(self.terms),
        }


def sombor_direct(g: DenseGraph) -> float:
    if g.order == 0:
        return 0.0
    deg = g.degrees().astype(np.float64)
    iu, ju = np.nonzero(np.triu(g.adjacency, 1))
    if iu.size == 0:
        return 0.0
    return float(np.sum(np.hypot(deg[iu], deg[ju])))


def sombor_compressed(g: CompressedGraph) -> float:
    parts = []
    cls = g.classes
    for i, a in enumerate(cls):
        if a.is_clique and a.size > 1:
            parts.append(math.comb(a.size, 2) * SQRT2 * a.degree)
        for b in cls[i + 1 :]:
            parts.append(a.size * b.size * math.hypot(a.degree, b.degree))
    return math.fsum(parts)


def theorem_terms(n: int) -> tuple[FormulaCase, list[float]]:
    """Summands of the closed form for ``n``, each computed on its own.

    All exponents >= 2 gives the complete-graph expression (one term).
    Otherwise three terms: clique edges, clique-to-independent edges, and
    edges between distinct independent classes (unordered pairs).
    """
    fac = factorize(n)
    if fac.is_prime:
        raise NotApplicableError(f"n={n} is prime; the graph is empty")
    N = n - totient(n) - 1
    if fac.m == 0:
        return FormulaCase.COMPLETE, [N / SQRT2 * (N - 1) ** 2]
    sizes = [totient(n // p) for p in fac.simple_primes]
    K = N - sum(sizes)
    first = (N - 1) / SQRT2 * K * (K - 1)
    second = K * math.fsum(s * math.hypot(N - 1, N - s) for s in sizes)
    third = math.fsum(
        sizes[i] * sizes[j] * math.hypot(N - sizes[i], N - sizes[j])
        for i in range(len(sizes))
        for j in range(i + 1, len(sizes))
    )
    return FormulaCase.GENERAL, [first, second, third]


def sombor_formula(n: int) -> tuple[float, FormulaCase]:
    case, terms = theorem_terms(n)
    return math.fsum(terms), case


def pkq_parameters(fac: Factorization) -> tuple[int, int, int] | None:
    """``(p, k, q)`` when ``n = p**k * q`` with ``k >= 2``."""
    if len(fac.factors) != 2:
        return None
    (a, ka), (b, kb) = fac.factors
    if ka >= 2 and kb == 1:
        return a, ka, b
    if kb >= 2 and ka == 1:
        return b, kb, a
    return None


def pqr_parameters(fac: Factorization) -> tuple[int, int, int] | None:
    if len(fac.factors) == 3 and all(k == 1 for _, k in fac.factors):
        p, q, r = fac.primes
        return p, q, r
    return None


def pkq_index_printed(p: int, k: int, q: int) -> float:
    """The p^k q index corollary exactly as printed (squared degree factor)."""
    a = p ** (k - 1) * q
    deg = p ** (k - 1) * (p + q - 1) - 2
    return (a - 1) * (a - 2) * deg**2 / SQRT2 + (a - 1) * p ** (k - 1) * (p - 1) * math.hypot(deg, a - 1)


def pqr_index_printed(p: int, q: int, r: int) -> float:
    """The pqr index corollary as printed, with its clique degree ``... - 4``.

    The unbalanced bracket in the square-root terms is read as ``(D - 4)**2``.
    """
    big = p * (q - 1) + q * (r - 1) + r * (p - 1)
    c = p + q + r - 3
    deg = big - 4
    return (
        c * ((p + q + r - 4) * big - 4) / SQRT2
        + c * (q - 1) * (r - 1) * math.hypot(deg, p * q + p * r - p - 1)
        + c * (p - 1) * (r - 1) * math.hypot(deg, p * q + q * r - q - 1)
        + c * (p - 1) * (q - 1) * math.hypot(deg, p * r + q * r - r - 1)
    )


def index_report(n: int, dense: DenseGraph | None = None, compressed: CompressedGraph | None = None) -> IndexReport:
    g = compressed if compressed is not None else build_compressed(n)
    d = dense if dense is not None else expand(g)
    direct = sombor_direct(d)
    comp = sombor_compressed(g)
    if g.partition.trivial:
        return IndexReport(n, direct, comp, None, FormulaCase.NOT_APPLICABLE, None)
    case, terms = theorem_terms(n)
    value = math.fsum(terms)
    rel = abs(value - direct) / max(1.0, direct)
    return IndexReport(n, direct, comp, value, case, rel, terms)
