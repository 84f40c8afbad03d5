import random

import pytest

from modpuiseux.bpoly import reduce_mod_p
from modpuiseux.parsing import parse_bipoly

ACCEPTANCE_LINES = []


def P(text):
    """Polynomial over Q from text."""
    return parse_bipoly(text)


def Pp(text, p):
    return reduce_mod_p(parse_bipoly(text), p)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
