import numpy as np
import pytest

from semirep.catalog import builtin

# Filled by tests/test_acceptance.py; printed once at the end of the session.
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(params=["b2", "i2", "chain2", "chain3", "chain4", "c3", "s3", "trivial"])
def inverse_builtin(request):
    return builtin(request.param)
