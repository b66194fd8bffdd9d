import pytest

from vsjones.fixtures import BUILTIN, fixture


@pytest.fixture
def ex1():
    return fixture("example1")


@pytest.fixture(params=sorted(BUILTIN))
def builtin(request):
    return request.param, BUILTIN[request.param]
