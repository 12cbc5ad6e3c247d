import pytest
from hypothesis import settings

from skewlab.text import parse_skew, parse_tower

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SPECS = {
    "F4": "GF(2)^2/y^2+y+1",
    "F8": "GF(2)^3/y^3+y+1",
    "F9": "GF(3)^2/y^2+1",
    "F16": "GF(2)^4/y^4+y^3+1",
    "F64": "GF(2^2/z^2+z+1)^3",
}


@pytest.fixture(scope="session")
def towers():
    return {k: parse_tower(v) for k, v in SPECS.items()}


@pytest.fixture(scope="session")
def F4(towers):
    return towers["F4"]


@pytest.fixture
def P(F4):
    """Parse a polynomial over F_4."""
    return lambda s: parse_skew(F4, s)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
