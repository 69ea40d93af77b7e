from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from multidiag.field import GaussianRational
from multidiag.mdmatrix import MDMatrix

# exact rational arithmetic makes per-example timing too noisy for a deadline
settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def _report(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _report


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(lambda r, i: r + i * GaussianRational(0, 1), rationals, rationals)


@st.composite
def shapes(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    return n, k


@st.composite
def md_matrices(draw, n, k, elements=rationals):
    s = n // k
    diags = {}
    for p in range(-s, s + 1):
        if draw(st.booleans()):
            last = n - abs(p) * k
            vals = draw(st.lists(elements, min_size=last + 1, max_size=last + 1))
            diags[p] = vals + [Fraction(0)] * (n - last)
    return MDMatrix(n, k, diags)


FIXTURE_A = MDMatrix(2, 2, {-1: [1, 0, 0], 0: [2, 3, 4], 1: [1, 0, 0]})
