import pytest

from mhg_twist import resolve_backend


def _available_backends():
    names = ["numpy"]
    try:
        resolve_backend("numba")
        names.append("numba")
    except Exception:
        pass
    return names


BACKENDS = _available_backends()


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Run a test once per compute backend present in this environment."""
    return request.param
