"""Pytest configuration and fixtures."""

import pytest

from src.core import ModelRegistry
from src.core.builtins import register_builtins
from src.groups import classify_orientations, sts_aut_group


@pytest.fixture(scope="session", autouse=True)
def builtins():
    """Make sure every builtin model is registered."""
    if "sts7" not in ModelRegistry.names():
        register_builtins()


@pytest.fixture(scope="session")
def sts3():
    return ModelRegistry.get("sts3")


@pytest.fixture(scope="session")
def sts7():
    """The Fano plane."""
    return ModelRegistry.get("sts7")


@pytest.fixture(scope="session")
def sts9():
    """The affine plane of order 3."""
    return ModelRegistry.get("sts9")


@pytest.fixture(scope="session")
def aut7(sts7):
    return sts_aut_group(sts7)


@pytest.fixture(scope="session")
def aut9(sts9):
    return sts_aut_group(sts9)


@pytest.fixture(scope="session")
def report7(sts7, aut7):
    """Classification of all 128 orientations of the Fano plane."""
    return classify_orientations(sts7, base_aut=aut7)


@pytest.fixture(scope="session")
def report9(sts9, aut9):
    """Classification of all 4096 orientations of STS(9)."""
    return classify_orientations(sts9, base_aut=aut9)


@pytest.fixture(scope="session")
def zd7():
    """Seven-point orientation with the zero-divisor s1+s5."""
    return ModelRegistry.get("zd7")


@pytest.fixture(scope="session")
def octonion7():
    return ModelRegistry.get("o1_7")
