import pytest

from tamari_intervals import IntervalPoset, validate


def ip(n: int, *pairs: tuple[int, int]) -> IntervalPoset:
    """Interval-poset from ``(a, b)`` pairs meaning ``a ⊲ b``."""
    return validate(n, pairs)


@pytest.fixture
def poset4():
    return ip(4, (2, 1), (3, 1), (3, 4))
