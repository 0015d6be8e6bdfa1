import numpy as np
import pytest

from entdyn.propagation import generator_spectrum, hamiltonian_spectrum

import report


@pytest.fixture
def rng():
    return np.random.default_rng(20110526)


@pytest.fixture(autouse=True)
def _fresh_caches():
    yield
    hamiltonian_spectrum.cache_clear()
    generator_spectrum.cache_clear()


def pytest_terminal_summary(terminalreporter):
    if report.LINES:
        terminalreporter.section("acceptance criteria")
        for line in report.LINES:
            terminalreporter.write_line(line)
