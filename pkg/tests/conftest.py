import pytest

from zhualg.rational import Q
from zhualg.voa import HeisenbergSpace, heisenberg, virasoro


@pytest.fixture(scope="session")
def heis():
    return heisenberg()


@pytest.fixture(scope="session")
def vir():
    return virasoro(Q(1, 2))


@pytest.fixture(scope="session")
def fock23():
    return HeisenbergSpace(Q(2, 3))
