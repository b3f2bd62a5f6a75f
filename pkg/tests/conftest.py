import pytest

from kfano import datasets


@pytest.fixture(scope="session")
def prism():
    return datasets.builtin_polytope("deg12-prism")


@pytest.fixture(scope="session")
def fat():
    return datasets.builtin_polytope("fat-point")


@pytest.fixture(scope="session")
def mm43():
    return datasets.builtin_polytope("mm4-3")


@pytest.fixture(scope="session")
def mm210():
    return datasets.builtin_polytope("mm2-10")
