import pytest


@pytest.fixture
def steady_run():
    from helpers import steady_activity

    return steady_activity(n=1200, hr=140, speed=1000.0 / 300.0)
