from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rbmagnus.algebra import Matrix, PolyMatrix, SeqFn

settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-3, 3), st.sampled_from([1, 2, 4]))


@st.composite
def exact_matrices(draw, n=2):
    return Matrix([[draw(rationals) for _ in range(n)] for _ in range(n)], exact=True)


@st.composite
def float_matrices(draw, n=2):
    vals = draw(st.lists(st.floats(-1, 1, allow_nan=False), min_size=n * n, max_size=n * n))
    m = np.array(vals).reshape(n, n)
    norm = np.linalg.norm(m, 2)
    return Matrix(m / norm if norm > 1 else m, exact=False)


@st.composite
def poly_matrices(draw, n=2, max_degree=2):
    d = draw(st.integers(0, max_degree))
    return PolyMatrix([draw(exact_matrices(n)) for _ in range(d + 1)])


@st.composite
def sequences(draw, n=2, length=5):
    return SeqFn([draw(exact_matrices(n)) for _ in range(length)])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# Acceptance lines are collected here and echoed after the test summary.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
