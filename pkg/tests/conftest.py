import pytest

from simptoric.family import FamilyParams

# (criterion, verdict, detail) lines collected by test_acceptance.py
ACCEPTANCE_LINES = []


@pytest.fixture
def inst3():
    """n=3, p=3, l=1, a=2, d=1: the running desk-scale instance."""
    return FamilyParams(3, 3, 1, 2, 1, (0,), (1,))


@pytest.fixture
def inst4():
    return FamilyParams(4, 3, 1, 2, 1, (0, 0), (1, 1))


@pytest.fixture
def inst_p2():
    return FamilyParams(3, 2, 1, 1, 1, (0,), (1,))


@pytest.fixture
def inst_p3l2():
    return FamilyParams(3, 3, 2, 3, 1, (0,), (1,))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for crit, verdict, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{verdict:4s}  criterion {crit}: {detail}")
