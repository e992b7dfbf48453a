import os

import pytest

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def data_path():
    return lambda name: os.path.join(DATA, name)


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
