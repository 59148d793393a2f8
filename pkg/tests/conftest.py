import pytest

from gdwalk.core import VariableTable
from gdwalk.verify import EQ_TABLE


@pytest.fixture
def xyz():
    return VariableTable(("x", "y", "z"))


@pytest.fixture
def eq_table():
    return EQ_TABLE


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
