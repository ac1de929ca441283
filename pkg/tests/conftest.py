import os

import pytest
from hypothesis import HealthCheck, settings

from finkan import fixtures

DATA = os.path.join(os.path.dirname(__file__), "data")

settings.register_profile(
    "default", max_examples=40, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def cat1():
    return fixtures.cat1()


@pytest.fixture
def cat2():
    return fixtures.cat2()


@pytest.fixture
def V():
    return fixtures.V()


@pytest.fixture
def bang():
    return fixtures.bang()


@pytest.fixture
def inc1():
    return fixtures.inc1()


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE = {}


@pytest.fixture
def criterion():
    def record(number, ok, detail):
        ACCEPTANCE[number] = (ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
