import pytest

from support import ALL_RINGS, RING_IDS


@pytest.fixture(params=ALL_RINGS, ids=RING_IDS)
def ring(request):
    return request.param
