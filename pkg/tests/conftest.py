import numpy as np
import pytest

from choqkit import SetFunction


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


@pytest.fixture
def path_cut():
    """Cut function of the path 0 - 1 - 2."""
    return SetFunction.cut(3, [(0, 1), (1, 2)])
