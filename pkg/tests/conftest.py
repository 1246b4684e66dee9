import pytest

from centraljoins.suite import default_bases, default_partners


@pytest.fixture(scope="session")
def bases():
    """(name, RegularGraph) for every base graph in the family suite."""
    return default_bases()


@pytest.fixture(scope="session")
def partners():
    """(name, RegularGraph) for the join partners K2, K3, C4."""
    return default_partners()
