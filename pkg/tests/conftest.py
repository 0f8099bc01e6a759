from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qschroeder.schroeder import Params

F = Fraction

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
nonzero_rationals = small_rationals.filter(lambda r: r != 0)

# q values never equal to +-1 or 0, matching the verifier's default pools.
GENERIC_Q = [F(1, 2), F(1, 3), F(2, 3), F(2), F(3, 2)]


@pytest.fixture
def schroeder_params():
    return Params.rational(1, 1, 1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
