"""Shared fixtures and hypothesis profiles."""
import os

import hypothesis
import numpy as np
import pytest

from spext.config import get_settings
from spext.families import cycle, h_n, k1n_plus
from spext.graph import make_graph

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are re-read from the environment for every test."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def c4():
    """C_4 as 0-1-2-3-0"""
    return cycle(4)


@pytest.fixture
def paw():
    """Triangle 0-1-2 with pendant 0-3, i.e. K_{1,3}^+ = H_4"""
    return k1n_plus(4)


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 0, i.e. H_5"""
    return h_n(5)


@pytest.fixture
def bridged_triangles():
    """Triangles 0-1-2 and 3-4-5 joined by the bridge 2-3"""
    return make_graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])


@pytest.fixture
def triangle_chain():
    """Triangles 0-1-2, 1-3-4, 3-5-6: a max-edge cactus of order 7 with t = 2"""
    return make_graph(7, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (3, 4), (3, 5), (3, 6), (5, 6)])
