import numpy as np
import pytest

from rmtlab.rng import RngStream


def random_hermitian(gen: np.random.Generator, n: int) -> np.ndarray:
    g = gen.standard_normal((n, n)) + 1j * gen.standard_normal((n, n))
    return 0.5 * (g + g.conj().T)


def random_unitary(gen: np.random.Generator, n: int) -> np.ndarray:
    z = gen.standard_normal((n, n)) + 1j * gen.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def gen():
    return RngStream(2024).generator()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
