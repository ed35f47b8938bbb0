import pytest

from graetz import SolverConfig, build_solution, compute_spectrum
from graetz.oracle import shoot_eigenvalues

# RK4 shooting oracle, step 1e-4, bisection to 1e-10; unchanged at step 5e-5
ORACLE_LAMBDAS = [
    2.704364419885678, 6.679031449340982, 10.673379538027802, 14.671078462764854,
    18.66987186446204, 22.669143358856672, 26.668661995994626, 30.668323340913048,
]


@pytest.fixture(scope="session")
def spectrum8():
    return compute_spectrum(8, SolverConfig())


@pytest.fixture(scope="session")
def sol20():
    return build_solution(20)


@pytest.fixture(scope="session")
def sol40():
    return build_solution(40)


@pytest.fixture(scope="session")
def sol50():
    return build_solution(50)


@pytest.fixture(scope="session")
def oracle_lambdas():
    return shoot_eigenvalues(8)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
