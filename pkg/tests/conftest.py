from __future__ import annotations

from fractions import Fraction

import pytest

from polychow import CornerCut, Polygon, chop_corners

# shared reference polygons: the degree-3 plane triangle and the chain of
# polygons obtained from it by successive corner chops
CP2_TRIANGLE_COORDS = [(0, 0), (3, 0), (0, 3)]
HEXAGON_COORDS = [(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]
SYMMETRIC_HEXAGON_COORDS = [(-2, 1), (1, 1), (2, 0), (2, -1), (-1, -1), (-2, 0)]
UNIT_SQUARE_COORDS = [(0, 0), (1, 0), (1, 1), (0, 1)]


@pytest.fixture(scope="session")
def cp2_triangle() -> Polygon:
    return Polygon.from_coords(CP2_TRIANGLE_COORDS)


@pytest.fixture(scope="session")
def unit_square() -> Polygon:
    return Polygon.from_coords(UNIT_SQUARE_COORDS)


@pytest.fixture(scope="session")
def hexagon() -> Polygon:
    return Polygon.from_coords(HEXAGON_COORDS)


@pytest.fixture(scope="session")
def symmetric_hexagon() -> Polygon:
    return Polygon.from_coords(SYMMETRIC_HEXAGON_COORDS)


@pytest.fixture(scope="session")
def heptagon(hexagon) -> Polygon:
    """Hexagon with the top-left corner chopped at depth 1/2."""
    return chop_corners(hexagon, [CornerCut.of((0, 2), Fraction(1, 2))]).chopped


@pytest.fixture(scope="session")
def octagon(hexagon) -> Polygon:
    """Hexagon with two corners chopped at depth 1/2."""
    cuts = [CornerCut.of((0, 2), Fraction(1, 2)), CornerCut.of((2, 0), Fraction(1, 2))]
    return chop_corners(hexagon, cuts).chopped


@pytest.fixture(scope="session")
def nonagon(octagon) -> Polygon:
    """Octagon with the (1,2) corner chopped at depth 1/4."""
    return chop_corners(octagon, [CornerCut.of((1, 2), Fraction(1, 4))]).chopped


def quadrilateral(a: int, b: int, n: int) -> Polygon:
    """The non-rectangular Delzant quadrilateral with heights a, b and slant n."""
    return Polygon.from_coords([(0, 0), (0, a), (b, a), (b + a * n, 0)])


# ---------------------------------------------------------------------------
# acceptance reporting: one pass/fail line per criterion at the end of a run

from contextlib import contextmanager

_ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def record_criterion(number: int, name: str, passed: bool, detail: str = "") -> None:
    _ACCEPTANCE_RESULTS[number] = (name, passed, detail)


@contextmanager
def criterion(number: int, name: str):
    try:
        yield
    except BaseException as exc:
        message = str(exc).strip().replace("\n", " ")
        if len(message) > 300:
            message = message[:297] + "..."
        record_criterion(number, name, False, message)
        raise
    record_criterion(number, name, True)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE_RESULTS):
        name, passed, detail = _ACCEPTANCE_RESULTS[number]
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number:2d} [{status}] {name}"
        if detail and not passed:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
