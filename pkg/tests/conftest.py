import random
import sys

import pytest

from skewverify.algebra import InnerWitness, OuterAut
from skewverify.laurent import TwistedLaurentRing


@pytest.fixture(scope="session")
def aut():
    return OuterAut.from_data()


@pytest.fixture(scope="session")
def witness():
    return InnerWitness.from_data()


@pytest.fixture(scope="session")
def ring(aut, witness):
    return TwistedLaurentRing(aut, witness)


@pytest.fixture
def rng():
    return random.Random(0)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
