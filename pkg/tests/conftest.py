import random

import pytest

from cftft.ring import default_ring, ring_context


@pytest.fixture(scope="session")
def ctx():
    return default_ring()


@pytest.fixture(scope="session")
def ctx17():
    # p = 17, M = 16, omega = 3
    return ring_context(17, 4)


@pytest.fixture
def rng():
    return random.Random(20240601)


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    """Collects one PASS/FAIL line per acceptance criterion."""
    return _ACCEPTANCE_LINES


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
