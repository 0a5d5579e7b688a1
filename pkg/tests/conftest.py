import pytest
from hypothesis import HealthCheck, settings, strategies as st

from solidtm import models as M
from solidtm.cellspace import canonical

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

PLANE = M.plane()
HALF = M.half_plane()
PUNCT = M.punctured_square()
STRIP = M.strip_with_hole()
GENUS0 = [PLANE, HALF, PUNCT]
ALL = GENUS0 + [STRIP]


def subsets(model, max_size=40):
    return st.sets(st.sampled_from(canonical(model.X)), max_size=max_size).map(frozenset)


@pytest.fixture
def plane():
    return PLANE


@pytest.fixture
def punct():
    return PUNCT


@pytest.fixture
def strip():
    return STRIP
