import sys
import itertools

import pytest


def perms(n):
    return itertools.permutations(range(1, n + 1))


@pytest.fixture
def all_perms():
    return perms


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
