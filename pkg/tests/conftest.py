import pytest

from pseudoknots.flype import counterexample_pair
from pseudoknots.tables import load_table


@pytest.fixture(scope="session")
def table():
    return load_table()


@pytest.fixture(scope="session")
def p1_p2():
    return counterexample_pair()
