import pytest

from tukeydepth import PointSet, random_point_set

ACCEPTANCE_LINES: list[str] = []


def planar_corpus(count, n_max=10, seed=0):
    return [random_point_set(4 + i % (n_max - 3), 2, seed=seed + i) for i in range(count)]


def spatial_corpus(count, n_max=9, seed=0):
    return [random_point_set(5 + i % (n_max - 4), 3, seed=seed + i) for i in range(count)]


@pytest.fixture
def square():
    return PointSet.from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def pentagon_center():
    from tukeydepth.realizer import rational_regular_polygon

    return PointSet(2, tuple(rational_regular_polygon(5)) + ((0, 0),))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
