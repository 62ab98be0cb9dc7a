import pytest

from charm.families import Kind, make_family
from charm.graph import from_edges

PETERSEN_EDGES = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [
    (5 + i, 5 + (i + 2) % 5) for i in range(5)
]
K33_EDGES = [(a, b) for a in range(3) for b in range(3, 6)]


@pytest.fixture(scope="session")
def petersen():
    return from_edges(10, PETERSEN_EDGES)


@pytest.fixture(scope="session")
def k33():
    return from_edges(6, K33_EDGES)


@pytest.fixture(scope="session")
def k4():
    return from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def prism():
    return make_family(Kind.KLEE_LADDER, 6)


@pytest.fixture(scope="session")
def cube():
    return make_family(Kind.LADDER, 8)


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
