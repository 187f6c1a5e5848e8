import pytest

from clusterframe.presets import FINITE, INFINITE


@pytest.fixture(params=sorted(FINITE))
def finite_name(request):
    return request.param


@pytest.fixture
def finite_B(finite_name):
    return FINITE[finite_name]


A2 = FINITE["A2"]
B2 = FINITE["B2"]
G2 = FINITE["G2"]
A3 = FINITE["A3"]
B3 = FINITE["B3"]
AFFINE2 = INFINITE["affine2"]
AFFINE_A2 = INFINITE["affineA2"]


def pytest_configure(config):
    config._acceptance = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
