#!python
# coding: utf-8

"""
Pytest configuration.
"""


import numpy as np
import pytest
from hypothesis import strategies as st
from alexgeo import ModelSpace


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large counted corpora (deselect with -m \"not slow\")")


def sample_points(space, count, seed, center=None, radius=1.0):
    """count seeded random points of the ball B(center, radius)."""
    rng = np.random.default_rng(seed)
    return [space.random_point(rng, center, radius) for _ in range(count)]


def model_spaces():
    return [
        ModelSpace.euclidean(2),
        ModelSpace.euclidean(3),
        ModelSpace.sphere(2),
        ModelSpace.sphere(3, kappa=4.0),
        ModelSpace.hyperbolic(2),
        ModelSpace.hyperbolic(3, kappa=-0.5),
    ]


# seeds drive numpy generators, so hypothesis shrinks over seeds rather than raw coordinates
seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture(scope="session")
def plane():
    return ModelSpace.euclidean(2)


@pytest.fixture(scope="session")
def sphere():
    return ModelSpace.sphere(2)


@pytest.fixture(scope="session")
def hyperbolic():
    return ModelSpace.hyperbolic(2)


@pytest.fixture(params=model_spaces(), ids=repr)
def space(request):
    return request.param


@pytest.fixture()
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture()
def square_matrix():
    f = open("tests/distance_matrix_square.csv", newline="")
    yield f
    f.close()


@pytest.fixture()
def corrupted_matrix():
    f = open("tests/distance_matrix_corrupted.csv", newline="")
    yield f
    f.close()


@pytest.fixture()
def sphere_measure_file():
    f = open("tests/measure_sphere.json")
    yield f
    f.close()


@pytest.fixture()
def trivial_config():
    f = open("tests/scenarios_trivial.json")
    yield f
    f.close()
