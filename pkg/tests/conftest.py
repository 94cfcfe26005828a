import pytest

from treecount.treegen import gen_lifted_complete, gen_random_regular, named_graph


@pytest.fixture(scope="session")
def petersen():
    return named_graph("petersen")


@pytest.fixture(scope="session")
def heawood():
    return named_graph("heawood")


@pytest.fixture(scope="session")
def lifted_k4():
    return gen_lifted_complete(3, 1)


@pytest.fixture(scope="session")
def tutte_coxeter():
    return named_graph("tutte_coxeter")


@pytest.fixture(scope="session")
def cage_4_8():
    return named_graph("cage_4_8")


@pytest.fixture(scope="session")
def girth12():
    """3-regular, girth >= 12: admissible for interaction radius <= 5."""
    return gen_random_regular(3000, 3, 12, seed=7)


@pytest.fixture(scope="session")
def girth15():
    """3-regular, girth >= 15: admissible for interaction radius <= 7."""
    return gen_random_regular(30000, 3, 15, seed=11)
