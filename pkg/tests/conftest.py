import pytest
from hypothesis import settings, strategies as st

from qpl import (cyclic_group, klein_four, random_quasigroup, symmetric_group_3,
                 totally_symmetric_z3)

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def z4():
    return cyclic_group(4)


@pytest.fixture
def ts3():
    return totally_symmetric_z3()


@pytest.fixture
def k4():
    return klein_four()


@pytest.fixture
def s3():
    return symmetric_group_3()


def quasigroups(min_order=1, max_order=6):
    return st.builds(random_quasigroup, st.integers(min_order, max_order),
                     st.integers(0, 2**32))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
