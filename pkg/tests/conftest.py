import sys

import pytest

from _gen import corpus_programs
from causal_alp.parser import parse_program

SPRINKLER = "abducible c.\nr :- c.\ns :- not c.\nw :- r.\nw :- s.\nd :- w.\n"
HOUSES = "abducible sf1, sf2.\nf1 :- sf1.\nf2 :- sf2.\nf2 :- f1.\nf1 :- f2.\n"
FARMER = "abducible h, e.\nt :- p, not e.\np :- not t, s.\ns :- h.\n"


@pytest.fixture(scope="session")
def corpus():
    return corpus_programs()


@pytest.fixture
def sprinkler():
    return parse_program(SPRINKLER)


@pytest.fixture
def sprinkler_observed():
    return parse_program(SPRINKLER + ":- not s.\n")


@pytest.fixture
def houses():
    return parse_program(HOUSES)


@pytest.fixture
def farmer():
    return parse_program(FARMER)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
