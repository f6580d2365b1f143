import math
import os
import sys

import hypothesis
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from nevderiv.models import NodeSet  # noqa: E402
from nevderiv.services.table import sample_function  # noqa: E402

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def cubic(x: float) -> float:
    return 1 + x + x**2 + x**3


@pytest.fixture
def cubic_table():
    """11 equidistant samples of 1 + x + x^2 + x^3 on [-1, 1]"""
    return sample_function(cubic, -1.0, 1.0, 11, name="cubic")


@pytest.fixture
def cubic_nodes(cubic_table):
    return NodeSet(nodes=cubic_table.samples)


@pytest.fixture
def sin_table():
    """21 equidistant samples of sin on [0, 2 pi]"""
    return sample_function(math.sin, 0.0, 2 * math.pi, 21, name="sin")


@pytest.fixture
def square_table():
    """5 equidistant samples of x^2 on [-1, 1]"""
    return sample_function(lambda x: x * x, -1.0, 1.0, 5, name="square")
