"""Sombor matrix, its spectrum by two routes, and Sombor energy.

The full route diagonalizes the dense Sombor matrix with cyclic Jacobi
rotations. The structural route uses twin-vertex eigenvalues plus the
eigenvalues of the equitable quotient over the divisor classes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConvergenceError, GuardError, NotApplicableError
from .numtheory import factorize
from .ring_oracle import DenseGraph
from .sombor_index import pkq_parameters
from .structure import CompressedGraph, build_compressed, expand

SQRT2 = math.sqrt(2.0)
MATRIX_CAP = 5000
DEFAULT_TOL = 1e-9
MAX_SWEEPS = 100
MATCH_TOL = 1e-6


@dataclass
class SymMatrix:
    order: int
    entries: np.ndarray

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.entries)) if self.order else 0.0


@dataclass
class QuotientMatrix:
    cells: list[tuple[str, int]]
    entries: np.ndarray

    def symmetrized(self) -> SymMatrix:
        """Similar symmetric matrix ``D^1/2 Q D^-1/2`` with ``D = diag(sizes)``."""
        root = np.sqrt(np.array([s for _, s in self.cells], dtype=np.float64))
        sym = self.entries * root[:, None] / root[None, :]
        sym = 0.5 * (sym + sym.T)
        return SymMatrix(len(self.cells), sym)


@dataclass
class Spectrum:
    """Eigenvalue multiset as ``(value, multiplicity)`` pairs, largest first."""

    pairs: list[tuple[float, int]]
    cluster_tolerance: float

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[float]:
        out: list[float] = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return out

    def trace(self) -> float:
        return math.fsum(v * m for v, m in self.pairs)

    def sum_squares(self) -> float:
        return math.fsum(v * v * m for v, m in self.pairs)

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.cluster_tolerance if tol is None else tol
        return sum(m for v, m in self.pairs if abs(v - value) <= tol)

    def largest(self) -> float:
        return self.pairs[0][0] if self.pairs else 0.0

    def to_dict(self) -> dict:
        return {
            "pairs": [[v, m] for v, m in self.pairs],
            "cluster_tolerance": self.cluster_tolerance,
        }


class ClosedFormCase(str, enum.Enum):
    PK = "Pk"
    PKQ = "PkQ"
    NONE = "None"


@dataclass
class EnergyReport:
    n: int
    energy: float
    lower_bound: float
    closed_form: float | None
    closed_form_case: ClosedFormCase

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "energy": self.energy,
            "lower_bound": self.lower_bound,
            "closed_form": self.closed_form,
            "closed_form_case": self.closed_form_case.value,
        }


def cluster(values, tolerance: float) -> Spectrum:
    """Single-linkage clustering of sorted values; clusters report their mean."""
    ordered = sorted((float(v) for v in values), reverse=True)
    pairs: list[tuple[float, int]] = []
    group: list[float] = []
    for v in ordered:
        if group and group[-1] - v > tolerance:
            pairs.append((math.fsum(group) / len(group), len(group)))
            group = []
        group.append(v)
    if group:
        pairs.append((math.fsum(group) / len(group), len(group)))
    return Spectrum(pairs, tolerance)


def sombor_matrix(g: DenseGraph) -> SymMatrix:
    if g.order > MATRIX_CAP:
        raise GuardError(f"Sombor matrix refuses order {g.order} > {MATRIX_CAP}")
    deg = g.degrees().astype(np.float64)
    weights = np.hypot(deg[:, None], deg[None, :])
    return SymMatrix(g.order, np.where(g.adjacency, weights, 0.0))


def eig_sym(a: SymMatrix, tol: float = DEFAULT_TOL) -> Spectrum:
    if tol <= 0:
        raise ValueError("tol must be positive")
    order = a.order
    fro = a.frobenius()
    scale = max(1.0, fro)
    if order == 0:
        return Spectrum([], tol * scale)
    work = np.array(a.entries, dtype=np.float64, order="C", copy=True)
    off_tol = 1e-12 * fro
    skip_tol = 1e-13 * fro / order
    values, _sweeps, converged = kernels.jacobi_eigenvalues(work, off_tol, skip_tol, MAX_SWEEPS)
    if not converged:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps for order {order}")
    return cluster(values, tol * scale)


def frobenius_squared(g: CompressedGraph) -> int:
    """``||S||_F^2``: each edge appears twice, so this is twice the sum of cubed degrees."""
    return 2 * sum(c.size * c.degree**3 for c in g.classes)


def quotient_matrix(g: CompressedGraph) -> QuotientMatrix:
    """Equitable quotient: one merged cell for all clique vertices, one per independent class."""
    N = g.order
    cells: list[tuple[str, int]] = []
    degs: list[int] = []
    clique = g.partition.clique_size
    if clique:
        cells.append(("clique", clique))
        degs.append(N - 1)
    for c in g.partition.independent:
        cells.append((f"d={c.divisor}", c.size))
        degs.append(c.degree)
    k = len(cells)
    q = np.zeros((k, k))
    for i in range(k):
        for j in range(k):
            if i != j:
                q[i, j] = math.hypot(degs[i], degs[j]) * cells[j][1]
    if clique:
        q[0, 0] = SQRT2 * (N - 1) * (clique - 1)
    return QuotientMatrix(cells, q)


def _require_composite(n: int) -> CompressedGraph:
    g = build_compressed(n)
    if g.partition.trivial:
        raise NotApplicableError(f"n={n} is prime; the graph is empty")
    return g


def spectrum_theoretical(n: int, tol: float = DEFAULT_TOL) -> Spectrum:
    g = _require_composite(n)
    N = g.order
    K = g.partition.clique_size
    values: list[float] = []
    if K >= 2:
        values += [-SQRT2 * (N - 1)] * (K - 1)
    values += [0.0] * sum(c.size - 1 for c in g.partition.independent)
    qvals = eig_sym(quotient_matrix(g).symmetrized(), tol)
    values += qvals.values()
    scale = max(1.0, math.sqrt(frobenius_squared(g)))
    return cluster(values, tol * scale)


def spectrum_full(n: int, tol: float = DEFAULT_TOL) -> Spectrum:
    g = _require_composite(n)
    return eig_sym(sombor_matrix(expand(g)), tol)


def spectra_match(a: Spectrum, b: Spectrum, tolerance: float) -> tuple[bool, float]:
    """Multiset equality after sorting; returns the flag and the worst gap."""
    va, vb = sorted(a.values()), sorted(b.values())
    if len(va) != len(vb):
        return False, math.inf
    worst = max((abs(x - y) for x, y in zip(va, vb)), default=0.0)
    return worst <= tolerance, worst


def energy(s: Spectrum) -> float:
    return math.fsum(abs(v) * m for v, m in s.pairs)


def energy_lower_bound(g: CompressedGraph) -> float:
    N = g.order
    return SQRT2 * (N - 1) * (g.partition.clique_size - 1)


def pk_energy_printed(p: int, k: int) -> float:
    a = p ** (k - 1)
    return SQRT2 * (a - 2) ** 2 + SQRT2 * (a - 1) ** 2


def pkq_energy_printed(p: int, k: int, q: int) -> float:
    a = p ** (k - 1) * q
    phi = p ** (k - 1) * (p - 1)
    big = a + phi - 1
    lam = 2 * big**2 * (a - 2) ** 2 + 4 * phi * (a - 1) ** 2 * big**2
    return SQRT2 * big * (a - 1) + math.sqrt(lam)


def energy_bounds(n: int, spectrum: Spectrum | None = None) -> EnergyReport:
    g = _require_composite(n)
    if spectrum is None:
        spectrum = spectrum_full(n) if g.order <= MATRIX_CAP else spectrum_theoretical(n)
    fac = factorize(n)
    closed, case = None, ClosedFormCase.NONE
    if len(fac.factors) == 1:
        p, k = fac.factors[0]
        closed, case = pk_energy_printed(p, k), ClosedFormCase.PK
    elif (pkq := pkq_parameters(fac)) is not None:
        closed, case = pkq_energy_printed(*pkq), ClosedFormCase.PKQ
    return EnergyReport(n, energy(spectrum), energy_lower_bound(g), closed, case)
