import pytest

from gen import mk_level


@pytest.fixture
def open5():
    """5x5 open grid, start top-left facing east, goal at (4,0)."""
    return mk_level(5, 5, goal=(4, 0))


@pytest.fixture
def corridor5():
    """5x1 open corridor, goal at the far end."""
    return mk_level(5, 1, goal=(4, 0))


@pytest.fixture
def crash3():
    """3x3 grid with a wall directly east of the start."""
    return mk_level(3, 3, goal=(2, 2), walls=[(1, 0)])


@pytest.fixture
def unsolvable3():
    """3x3 grid split by a full wall column; goal unreachable."""
    return mk_level(3, 3, goal=(2, 2), walls=[(1, 0), (1, 1), (1, 2)])
