import pytest

from weightedkstab.config import Config
from weightedkstab.stability import StabilityCase


@pytest.fixture(autouse=True)
def reset_config():
    yield
    Config.reset()


@pytest.fixture(scope="session")
def quadric_threefold():
    return StabilityCase.from_catalog("3-2-18")


@pytest.fixture(scope="session")
def threefold_2_29():
    return StabilityCase.from_catalog("3-2-19")
