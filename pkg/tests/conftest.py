import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from edgekempe.compose import HPlan, h_compose  # noqa: E402
from edgekempe.families import census, k33, k4, prism, theta  # noqa: E402


@pytest.fixture
def theta_h_theta():
    return h_compose(HPlan.default(theta(), theta()))


@pytest.fixture(scope="session")
def census10():
    return list(census(10, min_n=4))


@pytest.fixture(scope="session")
def small_pool():
    return {"K_4": k4(), "K_3,3": k33(), "theta": theta(), "Pr_3": prism(3), "Pr_4": prism(4)}
