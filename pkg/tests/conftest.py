import pytest

from ringstrat.lattice import hnf_from_generators
from ringstrat.ring import make_quad_quotient, make_zn

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def z12():
    return make_zn(12)


@pytest.fixture(scope="session")
def quad50():
    return make_quad_quotient(-5, hnf_from_generators(-5, [(10, 0), (5, 5)]))


@pytest.fixture(scope="session")
def z6000():
    return make_zn(6000)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
