import numpy as np
import pytest
from hypothesis import strategies as st

from yangmix.states import MixingAmplitudes

_ACCEPTANCE_LINES = []


def unit_vectors(dim):
    """Hypothesis strategy for real unit vectors, bounded away from zero length."""
    comp = st.floats(-1, 1, allow_nan=False, allow_infinity=False)
    return (st.lists(comp, min_size=dim, max_size=dim)
            .map(np.array)
            .filter(lambda v: np.linalg.norm(v) > 1e-3)
            .map(lambda v: v / np.linalg.norm(v)))


alphas = unit_vectors(3).map(lambda v: MixingAmplitudes.normalized(*v))


def random_pair_state(rng):
    v = rng.normal(size=9) + 1j * rng.normal(size=9)
    return v / np.linalg.norm(v)


def random_product_state(rng):
    a = rng.normal(size=3) + 1j * rng.normal(size=3)
    b = rng.normal(size=3) + 1j * rng.normal(size=3)
    v = np.kron(a, b)
    return v / np.linalg.norm(v)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def criterion():
    """Record a one-line acceptance verdict; printed in the terminal summary."""
    def record(number, ok, detail):
        _ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
