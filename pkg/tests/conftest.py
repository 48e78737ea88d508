import pytest

from silc.rootdata import root_datum
from silc.semiinf import si_order
from silc.weylgroup import weyl_group


@pytest.fixture(scope="session")
def a1():
    return root_datum("A", 1)


@pytest.fixture(scope="session")
def a2():
    return root_datum("A", 2)


@pytest.fixture(scope="session")
def a3():
    return root_datum("A", 3)


@pytest.fixture(scope="session")
def b2():
    return root_datum("B", 2)


@pytest.fixture(scope="session")
def g2():
    return root_datum("G", 2)


@pytest.fixture(scope="session")
def wg_a1(a1):
    return weyl_group(a1)


@pytest.fixture(scope="session")
def wg_a2(a2):
    return weyl_group(a2)


@pytest.fixture(scope="session")
def so_a1(a1):
    return si_order(a1)


@pytest.fixture(scope="session")
def so_a2(a2):
    return si_order(a2)
