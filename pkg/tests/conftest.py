"""Shared fixtures."""
import numpy as np
import pytest

from src.config import reset_config


@pytest.fixture(autouse=True)
def fresh_config():
    """Re-read the environment in every test so monkeypatched settings apply."""
    reset_config()
    yield
    reset_config()


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(1234))
