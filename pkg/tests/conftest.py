import pytest

from glue.signature import parse_ctx, parse_ty, sig0


@pytest.fixture(scope="session")
def sig():
    return sig0()


@pytest.fixture
def ty():
    return parse_ty


@pytest.fixture
def ctx():
    return parse_ctx
