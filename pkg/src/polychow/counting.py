"""Lattice point enumeration and the degree-2 counting polynomials.

Enumeration (an exact row scan) is the single source of truth here. The
closed forms for the Ehrhart and lattice-sum polynomials are built from a
couple of enumerated values and then cross-checked against enumeration at
further dilations; a mismatch raises InternalInconsistency instead of
returning a silently wrong polynomial.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .errors import EnumerationLimitExceeded, InternalInconsistency, NotLatticePolygon
from .geometry import (
    AffineMap,
    Polygon,
    Vec2,
    ZERO_VEC,
    area,
    is_lattice,
    moment_integral,
)

MAX_ENUM_ENV = "POLYCHOW_MAX_ENUM"
DEFAULT_MAX_ENUM = 10**8


def enumeration_budget() -> int:
    raw = os.environ.get(MAX_ENUM_ENV)
    if raw is None:
        return DEFAULT_MAX_ENUM
    try:
        budget = int(raw)
    except ValueError as exc:
        raise EnumerationLimitExceeded(f"{MAX_ENUM_ENV} is not an integer: {raw!r}") from exc
    if budget < 1:
        raise EnumerationLimitExceeded(f"{MAX_ENUM_ENV} must be positive, got {budget}")
    return budget


@dataclass(frozen=True)
class ScalarPoly:
    """Quadratic polynomial c2*i^2 + c1*i + c0 with exact coefficients."""

    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __call__(self, i: int) -> Fraction:
        return (self.c2 * i + self.c1) * i + self.c0

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c2, self.c1, self.c0)


@dataclass(frozen=True)
class VecPoly:
    """Quadratic polynomial with plane-vector coefficients."""

    c2: Vec2
    c1: Vec2
    c0: Vec2

    def __call__(self, i: int) -> Vec2:
        return (self.c2 * i + self.c1) * i + self.c0

    def __add__(self, other: "VecPoly") -> "VecPoly":
        return VecPoly(self.c2 + other.c2, self.c1 + other.c1, self.c0 + other.c0)

    def is_zero(self) -> bool:
        return self.c2 == ZERO_VEC and self.c1 == ZERO_VEC and self.c0 == ZERO_VEC


def lattice_points(polygon: Polygon, i: int) -> list[tuple[int, int]]:
    """All integer points of the i-th dilation, lexicographically sorted.

    Exact row scan: the integer y range comes from rational vertex bounds,
    and each row's x interval from intersecting the edge half-planes.
    """
    if i < 1:
        raise ValueError("dilation factor must be a positive integer")
    verts = [v * i for v in polygon.vertices]
    n = len(verts)
    edges = [(verts[j], verts[(j + 1) % n] - verts[j]) for j in range(n)]
    y_lo = ceil(min(v.y for v in verts))
    y_hi = floor(max(v.y for v in verts))

    budget = enumeration_budget()
    total = 0
    points: list[tuple[int, int]] = []
    for y in range(y_lo, y_hi + 1):
        x_lo: Fraction | None = None
        x_hi: Fraction | None = None
        feasible = True
        for p, d in edges:
            # interior is on the left of each CCW edge: d.x*(y-p.y) - d.y*(x-p.x) >= 0
            if d.y == 0:
                if (d.x > 0 and y < p.y) or (d.x < 0 and y > p.y):
                    feasible = False
                    break
            else:
                bound = p.x + d.x * (y - p.y) / d.y
                if d.y > 0:
                    x_hi = bound if x_hi is None else min(x_hi, bound)
                else:
                    x_lo = bound if x_lo is None else max(x_lo, bound)
        if not feasible or x_lo is None or x_hi is None:
            continue
        first = ceil(x_lo)
        last = floor(x_hi)
        if last < first:
            continue
        total += last - first + 1
        if total > budget:
            raise EnumerationLimitExceeded(
                f"enumeration exceeds {budget} points (set {MAX_ENUM_ENV} to raise the cap)"
            )
        points.extend((x, y) for x in range(first, last + 1))
    points.sort()
    return points


def ehrhart_eval(polygon: Polygon, i: int) -> int:
    """Number of lattice points of the i-th dilation."""
    return len(lattice_points(polygon, i))


def ehrhart_poly(polygon: Polygon) -> ScalarPoly:
    """Counting polynomial of a lattice polygon.

    Built from the area and one enumeration (Pick form: the linear
    coefficient is E(1) - area - 1, the constant term is 1), then verified
    against enumeration at dilations 2 and 3.
    """
    if not is_lattice(polygon):
        raise NotLatticePolygon("counting polynomial needs integral vertices")
    vol = area(polygon)
    poly = ScalarPoly(vol, Fraction(ehrhart_eval(polygon, 1)) - vol - 1, Fraction(1))
    for i in (2, 3):
        if poly(i) != ehrhart_eval(polygon, i):
            raise InternalInconsistency(
                f"counting polynomial disagrees with enumeration at i={i}"
            )
    return poly


def sum_points(polygon: Polygon, i: int) -> Vec2:
    """Sum of the sample points of the i-th subdivision: the lattice points
    of the i-th dilation divided by i."""
    sx = 0
    sy = 0
    for x, y in lattice_points(polygon, i):
        sx += x
        sy += y
    return Vec2(Fraction(sx, i), Fraction(sy, i))


def sum_poly(polygon: Polygon) -> VecPoly:
    """Closed form of the point-sum polynomial of a lattice polygon.

    Interpolated from the moment integral and the sums at dilations 1 and
    2, then verified against enumeration at dilations 3 and 4.
    """
    if not is_lattice(polygon):
        raise NotLatticePolygon("sum polynomial needs integral vertices")
    m = moment_integral(polygon)
    s1 = sum_points(polygon, 1)
    s2 = sum_points(polygon, 2)
    poly = VecPoly(m, s2 - s1 - 3 * m, 2 * m - s2 + 2 * s1)
    for i in (3, 4):
        if poly(i) != sum_points(polygon, i):
            raise InternalInconsistency(
                f"sum polynomial disagrees with enumeration at i={i}"
            )
    return poly


def p_delta(polygon: Polygon, f: AffineMap, i: int) -> Vec2:
    """Sum of f over the sample points of the i-th subdivision.

    The points are enumerated; because f is affine the pointwise sum
    factors exactly as f_linear(sum of points) + count * offset.
    """
    points = lattice_points(polygon, i)
    sx = 0
    sy = 0
    for x, y in points:
        sx += x
        sy += y
    total = Vec2(Fraction(sx, i), Fraction(sy, i))
    return f.linear_apply(total) + f.offset * len(points)


def segment_lattice_points(p: Vec2, q: Vec2) -> list[tuple[int, int]]:
    """Integer points on the closed segment from p to q (integral endpoints)."""
    for v in (p, q):
        if v.x.denominator != 1 or v.y.denominator != 1:
            raise ValueError("segment endpoints must be integral")
    dx = int(q.x - p.x)
    dy = int(q.y - p.y)
    steps = gcd(abs(dx), abs(dy))
    if steps == 0:
        return [(int(p.x), int(p.y))]
    ux, uy = dx // steps, dy // steps
    return [(int(p.x) + j * ux, int(p.y) + j * uy) for j in range(steps + 1)]


def segment_count(p: Vec2, q: Vec2, i: int) -> int:
    """Number of sample points of the i-th subdivision on the segment."""
    return len(segment_lattice_points(p * i, q * i))


def segment_f_sum(p: Vec2, q: Vec2, f: AffineMap, i: int) -> Vec2:
    """Sum of f over the sample points of the i-th subdivision of a segment."""
    points = segment_lattice_points(p * i, q * i)
    sx = 0
    sy = 0
    for x, y in points:
        sx += x
        sy += y
    total = Vec2(Fraction(sx, i), Fraction(sy, i))
    return f.linear_apply(total) + f.offset * len(points)
