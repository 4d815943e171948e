import sys

import pytest

from cylpath.harness.fixtures import fixture_category
from cylpath.kernel import standard_simplex


@pytest.fixture(scope="session")
def d0():
    return standard_simplex(0)


@pytest.fixture(scope="session")
def d1():
    return standard_simplex(1)


@pytest.fixture(scope="session")
def d2():
    return standard_simplex(2)


@pytest.fixture(scope="session")
def default_fixtures():
    return fixture_category("default", 2)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.line(number))
