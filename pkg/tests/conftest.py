import numpy as np
import pytest

from roadwheel import make_scene, make_wheel


@pytest.fixture(scope="session")
def secant_scene():
    return make_scene(make_wheel("line_secant"), (-1.3, 1.3))


@pytest.fixture(scope="session")
def circle_scene():
    return make_scene(make_wheel("unit_circle"))


@pytest.fixture(scope="session")
def square_scene():
    return make_scene(make_wheel("regular_polygon", sides=4))


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)
