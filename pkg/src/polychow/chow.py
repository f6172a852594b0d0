"""Chow weight of a polarized toric surface, from its moment polygon.

The weight with respect to an affine function f at dilation i is

    Vol(P) * sum_{a in P cap (Z/i)^2} f(a)  -  #(P cap (Z/i)^2) * integral_P f dv.

For the coordinate function it collapses to a vector polynomial of degree
at most one in i; its vanishing is necessary for Chow semistability. The
transformation laws (integral translation, unimodular change of lattice
basis, dilation) are exposed as checker routines so the CLI can run them
as diagnostics on user polygons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistency
from .geometry import (
    AffineMap,
    IntMat2,
    Polygon,
    Vec2,
    ZERO_VEC,
    apply_affine,
    area,
    moment_integral,
    scale,
    translate,
)
from .counting import VecPoly, ehrhart_eval, ehrhart_poly, p_delta, sum_poly


def integral_of_affine(polygon: Polygon, f: AffineMap) -> Vec2:
    """Integral of f over the polygon; exact because f is affine."""
    return f.linear_apply(moment_integral(polygon)) + f.offset * area(polygon)


def chow_eval(polygon: Polygon, f: AffineMap, i: int) -> Vec2:
    """Chow weight at dilation i, by direct enumeration."""
    vol = area(polygon)
    return p_delta(polygon, f, i) * vol - integral_of_affine(polygon, f) * ehrhart_eval(polygon, i)


def chow_poly(polygon: Polygon) -> VecPoly:
    """Chow weight of the coordinate function as a polynomial in i.

    The quadratic coefficient of Vol * s(i) - E(i) * moment must cancel;
    a nonzero remainder means a convention bug, so it is fatal.
    """
    vol = area(polygon)
    m = moment_integral(polygon)
    s = sum_poly(polygon)
    e = ehrhart_poly(polygon)
    c2 = s.c2 * vol - m * e.c2
    if c2 != ZERO_VEC:
        raise InternalInconsistency("Chow weight has a nonzero quadratic coefficient")
    return VecPoly(ZERO_VEC, s.c1 * vol - m * e.c1, s.c0 * vol - m * e.c0)


def coefficient_span_dim(poly: VecPoly) -> int:
    """Dimension of the span of the linear and constant coefficient vectors."""
    rows = (poly.c1, poly.c0)
    if all(r == ZERO_VEC for r in rows):
        return 0
    if rows[0].cross(rows[1]) != 0:
        return 2
    return 1


@dataclass(frozen=True)
class LawCheck:
    """Structured pass/fail evidence for one transformation law."""

    law: str
    holds: bool
    lhs: Vec2
    rhs: Vec2


def check_translation_law(polygon: Polygon, offset: Vec2, i: int) -> LawCheck:
    """Chow weight is unchanged by integral translation."""
    if offset.x.denominator != 1 or offset.y.denominator != 1:
        raise ValueError("translation law holds for integral offsets")
    f = AffineMap.identity()
    lhs = chow_eval(translate(polygon, offset), f, i)
    rhs = chow_eval(polygon, f, i)
    return LawCheck("translation", lhs == rhs, lhs, rhs)


def check_unimodular_law(polygon: Polygon, u: IntMat2, i: int) -> LawCheck:
    """Chow weight is equivariant under determinant-one lattice maps."""
    if u.det() != 1:
        raise ValueError("unimodular law needs determinant one")
    f = AffineMap.identity()
    lhs = chow_eval(apply_affine(polygon, AffineMap.from_int_mat(u)), f, i)
    rhs = u.apply(chow_eval(polygon, f, i))
    return LawCheck("unimodular", lhs == rhs, lhs, rhs)


def check_scaling_law(polygon: Polygon, k: int, i: int) -> LawCheck:
    """Chow weight of the k-fold dilation is k^3 times the weight at k*i."""
    f = AffineMap.identity()
    lhs = chow_eval(scale(polygon, k), f, i)
    rhs = chow_eval(polygon, f, k * i) * Fraction(k**3)
    return LawCheck("scaling", lhs == rhs, lhs, rhs)
