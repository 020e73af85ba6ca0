import os

import pytest
from hypothesis import settings, HealthCheck

from zigzag.poly import Poly
from zigzag.PairClass import PairClass

# Exact arithmetic through sympy is slow enough to trip the default deadline.
settings.register_profile(
    "zigzag",
    deadline = None,
    max_examples = 40,
    suppress_health_check = [HealthCheck.too_slow, HealthCheck.filter_too_much]
)
settings.load_profile(os.getenv("ZIGZAG_HYPOTHESIS_PROFILE", "zigzag"))

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def pytest_addoption(parser):
    parser.addoption("--runslow", action = "store_true", default = False, help = "Also run the full-size checks marked `slow`.")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size acceptance runs; skipped unless --runslow is given")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason = "full-size run; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture
def carpet_seed():
    """``[w^2 - 2, w^2 - 3]``: all its shifted classes are pairwise non-isomorphic."""
    return PairClass(Poly([-2, 0, 1]), Poly([-3, 0, 1]))


@pytest.fixture
def self_swap_pair():
    """``[w(w - 1), w(w - 1)]``, isomorphic to its swap."""
    return PairClass(Poly([0, -1, 1]), Poly([0, -1, 1]))


@pytest.fixture
def distinct_swap_pair():
    """``[w(w - 1), w^2(w - 1)]``, not isomorphic to its swap."""
    return PairClass(Poly([0, -1, 1]), Poly([0, 0, -1, 1]))
