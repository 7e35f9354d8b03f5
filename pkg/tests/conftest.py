import pytest

from uqa.algebra import UqAlgebra
from uqa.rootdata import LeviSpec, build_cartan

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def A1():
    return UqAlgebra(build_cartan("A", 1))


@pytest.fixture(scope="session")
def A2():
    return UqAlgebra(build_cartan("A", 2))


@pytest.fixture(scope="session")
def B2():
    return UqAlgebra(build_cartan("B", 2))


@pytest.fixture(scope="session")
def A3():
    return UqAlgebra(build_cartan("A", 3))


@pytest.fixture(scope="session")
def levi_A2_1(A2):
    return LeviSpec.complement(A2.datum, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
