import numpy as np
import pytest

from slaterhf.basis import Exponents

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_exponents(rng, n, lo=0.2, hi=12.0):
    return [Exponents(*x) for x in rng.uniform(lo, hi, size=(n, 3))]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
