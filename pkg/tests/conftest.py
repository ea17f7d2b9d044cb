import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fermat_rrp.ring import build_context  # noqa: E402


@pytest.fixture
def ctx7():
    return build_context(7)


@pytest.fixture(params=[7, 11, 13])
def ctx(request):
    return build_context(request.param)
