from fractions import Fraction

import pytest
from hypothesis import settings

from nilpat import RatMatrix, build_Am_matrix, parse_matrix

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

Z3_TEXT = "0 1 1; -1/2 1 0; -1/2 0 -1"
Z4_TEXT = "0 1 1 1; 1/4 1 0 0; -16/5 0 2 0; -81/20 0 0 -3"
Z5_TEXT = "0 1 1 1 1; -1/14 1 0 0 0; 4 0 2 0 0; -27/2 0 0 3 0; -108/7 0 0 0 -6"


@pytest.fixture
def z1():
    return parse_matrix(Z3_TEXT)


@pytest.fixture
def z2():
    return parse_matrix(Z4_TEXT)


@pytest.fixture
def z3():
    return parse_matrix(Z5_TEXT)


@pytest.fixture
def n1(z1):
    return build_Am_matrix([z1, z1])


@pytest.fixture
def worked_n():
    return RatMatrix([[0, 1, 1], [Fraction(-1, 2), 1, 0], [Fraction(-1, 2), 0, -1]])


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
