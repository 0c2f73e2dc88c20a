import sys
import pytest

from cutcorners import fixtures


@pytest.fixture
def sq1():
    return fixtures.sq1()


@pytest.fixture
def lad2():
    return fixtures.lad2()


@pytest.fixture
def lad3():
    return fixtures.lad3()


@pytest.fixture
def grid4():
    return fixtures.grid4()


@pytest.fixture
def tri_wheel():
    return fixtures.tri_wheel()


def north_east(f):
    """GRID4 decomposition with mu = north side then east side, sigma = the rest."""
    from cutcorners.maps import decompose

    mu = f.path((0, 2), (1, 2), (2, 2), (2, 1), (2, 0))
    return decompose(f.map, mu[0], 0, 4, 0)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
