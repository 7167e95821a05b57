import pytest

from skidsim.config import REFERENCE_CONFIG
from skidsim.model import REFERENCE_ENVIRONMENT, REFERENCE_VEHICLE

ACCEPTANCE_LINES = []


@pytest.fixture
def params():
    return REFERENCE_VEHICLE


@pytest.fixture
def env():
    return REFERENCE_ENVIRONMENT


@pytest.fixture
def reference_config_path():
    return str(REFERENCE_CONFIG)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
