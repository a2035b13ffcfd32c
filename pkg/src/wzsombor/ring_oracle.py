"""Weakly zero-divisor graph of Z_n built straight from annihilators.

This is the ground-truth path. Annihilators exclude 0: with 0 allowed every
pair of vertices would be adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import GuardError
from .numtheory import _check_int, gcd

ORACLE_CAP = 5000
LITERAL_CHECK_LIMIT = 100


@dataclass(frozen=True)
class AnnihilatorSet:
    n: int
    x: int
    elements: frozenset[int]


@dataclass
class DenseGraph:
    """Simple graph on ring elements; ``adjacency`` is a symmetric bool matrix."""

    n: int
    vertices: list[int]
    adjacency: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(np.int64)

    def num_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> set[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        vs = self.vertices
        return {(vs[i], vs[j]) for i, j in zip(iu.tolist(), ju.tolist())}


def zero_divisors(n: int) -> list[int]:
    _check_int(n)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return [x for x in range(1, n) if gcd(x, n) > 1]


def annihilator(n: int, x: int) -> AnnihilatorSet:
    """Nonzero ``t`` with ``t*x = 0`` in Z_n, by full scan."""
    _check_int(n)
    if not 1 <= x <= n - 1:
        raise ValueError(f"x={x} outside [1, {n - 1}]")
    return AnnihilatorSet(n, x, frozenset(t for t in range(1, n) if (t * x) % n == 0))


def _require_zero_divisor(n: int, x: int) -> None:
    if not 1 <= x <= n - 1 or gcd(x, n) == 1:
        raise ValueError(f"{x} is not a nonzero zero-divisor of Z_{n}")


def wzd_adjacent(n: int, x: int, y: int) -> tuple[bool, tuple[int, int] | None]:
    """Adjacency with its first witness ``(w, z)``, w ascending then z ascending."""
    if x == y:
        raise ValueError("adjacency is only defined for distinct vertices")
    _require_zero_divisor(n, x)
    _require_zero_divisor(n, y)
    ann_x = sorted(annihilator(n, x).elements)
    ann_y = sorted(annihilator(n, y).elements)
    for w in ann_x:
        for z in ann_y:
            if (w * z) % n == 0:
                return True, (w, z)
    return False, None


def build_dense_oracle(n: int) -> DenseGraph:
    """Every vertex pair checked against the definition.

    For ``n <= 100`` the full-scan construction runs as well and must agree
    with the reduced witness search.
    """
    _check_int(n)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > ORACLE_CAP:
        raise GuardError(f"ring oracle refuses n={n} > {ORACLE_CAP}")
    xs = np.array(zero_divisors(n), dtype=np.int64)
    gcds = np.array([gcd(int(x), n) for x in xs], dtype=np.int64)
    adj = kernels.oracle_adjacency_reduced(n, gcds).astype(bool)
    if n <= LITERAL_CHECK_LIMIT:
        literal = kernels.oracle_adjacency_literal(n, xs).astype(bool)
        if not np.array_equal(adj, literal):
            raise AssertionError(f"reduced and literal oracle disagree for n={n}")
    return DenseGraph(n, xs.tolist(), adj)
