"""Divisor-class construction of the weakly zero-divisor graph of Z_n.

Vertices split into classes ``A_d = {x : gcd(x, n) = d}`` over proper divisors
``d``. Distinct classes are fully joined; a class is an independent set when
``d`` is a prime dividing ``n`` exactly once and a clique otherwise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import GuardError
from .numtheory import _check_int, factorize, proper_divisors, totient
from .ring_oracle import DenseGraph

EXPAND_CAP = 20000


class ClassKind(str, enum.Enum):
    COMPLETE = "complete"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class ClassInfo:
    divisor: int
    size: int
    kind: ClassKind
    degree: int

    @property
    def is_clique(self) -> bool:
        return self.kind is ClassKind.COMPLETE


@dataclass(frozen=True)
class DivisorClassPartition:
    n: int
    classes: tuple[ClassInfo, ...]
    total_vertices: int
    trivial: bool

    @property
    def clique_size(self) -> int:
        """Number of vertices lying in complete classes."""
        return sum(c.size for c in self.classes if c.is_clique)

    @property
    def independent(self) -> list[ClassInfo]:
        return [c for c in self.classes if not c.is_clique]


@dataclass(frozen=True)
class CompressedGraph:
    """Class-level graph; every pair of distinct classes is fully joined."""

    partition: DivisorClassPartition

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def classes(self) -> tuple[ClassInfo, ...]:
        return self.partition.classes

    @property
    def order(self) -> int:
        return self.partition.total_vertices

    def num_edges(self) -> int:
        inside = sum(math.comb(c.size, 2) for c in self.classes if c.is_clique)
        sizes = [c.size for c in self.classes]
        total = sum(sizes)
        across = (total * total - sum(s * s for s in sizes)) // 2
        return inside + across

    def degree_sum(self) -> int:
        return sum(c.size * c.degree for c in self.classes)


def class_kind(n: int, d: int) -> ClassKind:
    fac = factorize(n)
    if d in fac.simple_primes:
        return ClassKind.INDEPENDENT
    return ClassKind.COMPLETE


def partition(n: int) -> DivisorClassPartition:
    _check_int(n)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    simple = set(factorize(n).simple_primes)
    total = n - totient(n) - 1
    classes = []
    for d in proper_divisors(n):
        size = totient(n // d)
        if d in simple:
            kind, degree = ClassKind.INDEPENDENT, total - size
        else:
            kind, degree = ClassKind.COMPLETE, total - 1
        classes.append(ClassInfo(d, size, kind, degree))
    return DivisorClassPartition(n, tuple(classes), total, trivial=not classes)


def members(n: int, d: int) -> list[int]:
    _check_int(n)
    if not 1 < d < n or n % d:
        raise ValueError(f"{d} is not a proper divisor of {n}")
    return [x for x in range(d, n, d) if math.gcd(x, n) == d]


def build_compressed(n: int) -> CompressedGraph:
    return CompressedGraph(partition(n))


def class_labels(g: CompressedGraph) -> tuple[list[int], np.ndarray]:
    """Vertices in ascending ring order with the index of their class."""
    index = {c.divisor: i for i, c in enumerate(g.classes)}
    vertices = [x for x in range(1, g.n) if math.gcd(x, g.n) > 1]
    labels = np.array([index[math.gcd(x, g.n)] for x in vertices], dtype=np.int64)
    return vertices, labels


def expand(g: CompressedGraph) -> DenseGraph:
    if g.order > EXPAND_CAP:
        raise GuardError(f"expand refuses N={g.order} > {EXPAND_CAP}")
    vertices, labels = class_labels(g)
    clique = np.array([c.is_clique for c in g.classes], dtype=bool)
    same = labels[:, None] == labels[None, :]
    adj = ~same | (same & clique[labels][:, None])
    np.fill_diagonal(adj, False)
    return DenseGraph(g.n, vertices, adj)


def to_dot(g: CompressedGraph) -> str:
    """Undirected DOT text; vertex ``class`` attribute names its divisor."""
    dense = expand(g)
    divisor_of = {x: math.gcd(x, g.n) for x in dense.vertices}
    lines = [f"graph WZD_{g.n} {{"]
    for x in dense.vertices:
        lines.append(f'  {x} [label="{x}", class="d{divisor_of[x]}"];')
    for u, v in sorted(dense.edges()):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
