import pytest
from hypothesis import HealthCheck, settings

from conelift.polycore import Polynomial

from strategies import XY, XYZ

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def xy():
    return Polynomial.gens(XY)


@pytest.fixture
def xyz():
    return Polynomial.gens(XYZ)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
