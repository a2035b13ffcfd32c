import math

import networkx as nx
import pytest


def definition_graph(n: int) -> nx.Graph:
    """WΓ(Z_n) straight from the definition, independent of the package."""
    verts = [x for x in range(1, n) if math.gcd(x, n) > 1]
    ann = {x: [t for t in range(1, n) if t * x % n == 0] for x in verts}
    g = nx.Graph()
    g.add_nodes_from(verts)
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if any(w * z % n == 0 for w in ann[x] for z in ann[y]):
                g.add_edge(x, y)
    return g


def sombor_of(g: nx.Graph) -> float:
    return math.fsum(math.hypot(g.degree(u), g.degree(v)) for u, v in g.edges())


@pytest.fixture
def defgraph():
    return definition_graph


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
