import itertools

import networkx as nx
import pytest

from lambda_bundle.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def complete_graph(t: int) -> Graph:
    return Graph.from_edges(t, itertools.combinations(range(t), 2))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    return h


def assert_simple_symmetric(g: Graph) -> None:
    for v, nbrs in enumerate(g.adjacency):
        assert v not in nbrs
        assert len(set(nbrs)) == len(nbrs)
        for u in nbrs:
            assert 0 <= u < g.vertex_count
            assert v in g.adjacency[u]


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion, then assert."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
