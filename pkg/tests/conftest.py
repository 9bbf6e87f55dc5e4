import sys

import pytest

from brauer_workbench.exactnum import is_prime


@pytest.fixture(scope="session")
def small_primes():
    return [p for p in range(2, 100) if is_prime(p)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
