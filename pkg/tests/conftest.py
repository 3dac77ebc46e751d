import pytest
from hypothesis import settings

from speedcops.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def small_graph(edges, n=None):
    n = n if n is not None else 1 + max(max(e) for e in edges)
    return Graph.from_edges(n, edges)


@pytest.fixture
def P3():
    return small_graph([(0, 1), (1, 2)])


@pytest.fixture
def P4():
    return small_graph([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def C4():
    return small_graph([(0, 1), (1, 2), (2, 3), (3, 0)])


ACCEPTANCE: dict[str, str] = {}


def record(item: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[item] = f"{'PASS' if ok else 'FAIL'}  {item}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[key])
