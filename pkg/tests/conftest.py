from __future__ import annotations

import pytest
from hypothesis import settings


from geobraid.geodesy import build_ball

settings.register_profile("repo", deadline=None)
settings.load_profile("repo")

_BALLS: dict = {}
ACCEPTANCE_LINES: list[str] = []


def ball(n: int, radius: int):
    """Session-wide ball cache; a larger ball serves smaller radii."""
    if (n, radius) in _BALLS:
        return _BALLS[(n, radius)]
    for (m, r), t in sorted(_BALLS.items()):
        if m == n and r > radius:
            return t.truncated(radius)
    t = build_ball(n, radius)
    _BALLS[(n, radius)] = t
    return t


@pytest.fixture(scope="session")
def b3():
    return ball(3, 10)


@pytest.fixture(scope="session")
def b4():
    return ball(4, 7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
