from __future__ import annotations

from fractions import Fraction

import pytest

import brute
from conftest import quadrilateral
from polychow import (
    AffineMap,
    EnumerationLimitExceeded,
    IntMat2,
    NotLatticePolygon,
    Polygon,
    ScalarPoly,
    Vec2,
    VecPoly,
    apply_affine,
    ehrhart_eval,
    ehrhart_poly,
    lattice_points,
    p_delta,
    scale,
    sum_points,
    sum_poly,
    translate,
)
from polychow.counting import segment_count, segment_f_sum, segment_lattice_points


def coords_of(polygon):
    return [v.as_tuple() for v in polygon.vertices]


class TestLatticePoints:
    def test_unit_square(self, unit_square):
        assert lattice_points(unit_square, 1) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_triangle_count(self, cp2_triangle):
        assert len(lattice_points(cp2_triangle, 1)) == 10

    def test_scaled_octagon_count(self, octagon):
        assert len(lattice_points(scale(octagon, 4), 1)) == 55

    def test_sorted_lexicographically(self, hexagon):
        pts = lattice_points(hexagon, 2)
        assert pts == sorted(pts)

    def test_matches_brute_force(self, hexagon, heptagon, cp2_triangle):
        for polygon in (hexagon, heptagon, cp2_triangle, quadrilateral(2, 1, 2)):
            for i in range(1, 6):
                assert lattice_points(polygon, i) == sorted(
                    brute.enumerate_points(coords_of(polygon), i)
                )

    def test_rejects_nonpositive_dilation(self, unit_square):
        with pytest.raises(ValueError):
            lattice_points(unit_square, 0)

    def test_budget_cap(self, cp2_triangle, monkeypatch):
        monkeypatch.setenv("POLYCHOW_MAX_ENUM", "5")
        with pytest.raises(EnumerationLimitExceeded):
            lattice_points(cp2_triangle, 1)

    def test_budget_env_validation(self, cp2_triangle, monkeypatch):
        monkeypatch.setenv("POLYCHOW_MAX_ENUM", "soon")
        with pytest.raises(EnumerationLimitExceeded):
            lattice_points(cp2_triangle, 1)


class TestEhrhart:
    def test_hexagon_poly(self, hexagon):
        assert ehrhart_poly(hexagon) == ScalarPoly(Fraction(3), Fraction(3), Fraction(1))

    def test_unit_square_poly(self, unit_square):
        assert ehrhart_poly(unit_square) == ScalarPoly(Fraction(1), Fraction(2), Fraction(1))

    @pytest.mark.parametrize("a,b,n", [(1, 1, 1), (2, 1, 1), (1, 2, 3), (2, 2, 2)])
    def test_quadrilateral_poly(self, a, b, n):
        expected = ScalarPoly(
            Fraction(a * b) + Fraction(a * a * n, 2),
            Fraction(a + b) + Fraction(a * n, 2),
            Fraction(1),
        )
        assert ehrhart_poly(quadrilateral(a, b, n)) == expected

    def test_constant_term_is_one(self, hexagon, cp2_triangle, unit_square):
        for polygon in (hexagon, cp2_triangle, unit_square, quadrilateral(3, 2, 1)):
            assert ehrhart_poly(polygon).c0 == 1

    def test_rational_polygon_rejected(self, heptagon):
        with pytest.raises(NotLatticePolygon):
            ehrhart_poly(heptagon)

    def test_eval_on_rational_polygon(self, heptagon):
        # evaluation at specific dilations works for any rational polygon
        assert ehrhart_eval(heptagon, 2) == ehrhart_eval(scale(heptagon, 2), 1)

    def test_poly_matches_enumeration(self, hexagon):
        poly = ehrhart_poly(hexagon)
        for i in range(1, 6):
            assert poly(i) == ehrhart_eval(hexagon, i)


class TestSumPoints:
    def test_triangle(self, cp2_triangle):
        assert sum_points(cp2_triangle, 1) == Vec2.of(10, 10)

    def test_unit_square(self, unit_square):
        assert sum_points(unit_square, 1) == Vec2.of(2, 2)

    def test_scaled_octagon(self, octagon):
        big = scale(octagon, 4)
        assert sum_points(big, 1) == Vec2.of(220, 220)
        # dividing the dilation-2 lattice sum by 2 is part of the definition:
        # the raw sum over the doubled polygon is (1576, 1576)
        assert sum_points(big, 2) == Vec2.of(788, 788)

    def test_sample_points_average(self, hexagon):
        for i in (1, 2, 3):
            s = sum_points(hexagon, i)
            assert s == Vec2.of(Fraction(brute.point_sum(coords_of(hexagon), i)[0]),
                                Fraction(brute.point_sum(coords_of(hexagon), i)[1]))


class TestSumPoly:
    def test_triangle(self, cp2_triangle):
        nine_halves = Vec2.of(Fraction(9, 2), Fraction(9, 2))
        assert sum_poly(cp2_triangle) == VecPoly(nine_halves, nine_halves, Vec2.of(1, 1))

    def test_scaled_octagon(self, octagon):
        poly = sum_poly(scale(octagon, 4))
        assert poly == VecPoly(Vec2.of(176, 176), Vec2.of(40, 40), Vec2.of(4, 4))

    def test_unit_square(self, unit_square):
        # row sums give ((i+1)^2/2, (i+1)^2/2) * i ... i.e. the polynomial below
        poly = sum_poly(unit_square)
        for i in range(1, 6):
            expected = Fraction((i + 1) ** 2, 2)
            assert poly(i) == Vec2.of(expected, expected)

    def test_rational_polygon_rejected(self, heptagon):
        with pytest.raises(NotLatticePolygon):
            sum_poly(heptagon)

    def test_matches_enumeration(self, hexagon, unit_square):
        for polygon in (hexagon, unit_square, quadrilateral(1, 2, 1)):
            poly = sum_poly(polygon)
            for i in range(1, 6):
                assert poly(i) == sum_points(polygon, i)

    def test_doubled_hexagon(self, hexagon):
        poly = sum_poly(scale(hexagon, 2))
        assert poly == VecPoly(Vec2.of(24, 24), Vec2.of(12, 12), Vec2.of(2, 2))

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("a,b,n", [(1, 1, 1), (2, 1, 2), (1, 3, 1)])
    def test_scaled_quadrilateral_closed_forms(self, k, a, b, n):
        from polychow import boundary_moment

        scaled = scale(quadrilateral(a, b, n), k)
        # linear coefficient of the sum polynomial is half the boundary moment
        expected_boundary = Vec2.of(
            Fraction(k * k, 2)
            * (a * a * n * n + a * a * n + 2 * a * b * n + 2 * a * b + 2 * b * b),
            Fraction(k * k, 2) * 2 * a * (a + b),
        )
        assert boundary_moment(scaled) == expected_boundary
        poly = sum_poly(scaled)
        assert poly.c1 == expected_boundary * Fraction(1, 2)
        assert poly.c0 == Vec2.of(
            Fraction(k, 12) * (a * n * n + 3 * a * n + 6 * b),
            Fraction(k, 12) * 2 * a * (3 - n),
        )


class TestPDelta:
    def test_identity_equals_sum_points(self, hexagon):
        for i in (1, 2, 3):
            assert p_delta(hexagon, AffineMap.identity(), i) == sum_points(hexagon, i)

    def test_shifted_square(self, unit_square):
        f = AffineMap.translation(Vec2.of(1, 0))
        assert p_delta(unit_square, f, 1) == Vec2.of(6, 2)

    def test_doubling_map_on_triangle(self, cp2_triangle):
        f = AffineMap.linear(2, 0, 0, 2)
        assert p_delta(cp2_triangle, f, 1) == Vec2.of(20, 20)


class TestTransformationIdentities:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    @pytest.mark.parametrize("i", [1, 2, 3, 4])
    def test_scaling_identity(self, hexagon, k, i):
        assert sum_points(scale(hexagon, k), i) == sum_points(hexagon, k * i) * Fraction(k)
        assert ehrhart_eval(scale(hexagon, k), i) == ehrhart_eval(hexagon, k * i)

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_translation_identity(self, hexagon, i):
        c = Vec2.of(2, -1)
        f = AffineMap.identity()
        moved = translate(hexagon, c)
        expected = p_delta(hexagon, f, i) + c * Fraction(ehrhart_eval(hexagon, i))
        assert p_delta(moved, f, i) == expected

    @pytest.mark.parametrize("i", [1, 2, 3])
    @pytest.mark.parametrize("rows", [((2, 1), (1, 1)), ((0, 1), (1, 0))])  # det +1 / -1
    def test_unimodular_points_bijection(self, hexagon, i, rows):
        u = IntMat2.from_rows(*rows)
        image = apply_affine(hexagon, AffineMap.from_int_mat(u))
        source = {
            (u.a * x + u.b * y, u.c * x + u.d * y) for x, y in lattice_points(hexagon, i)
        }
        assert source == set(lattice_points(image, i))


class TestSegments:
    def test_segment_points(self):
        pts = segment_lattice_points(Vec2.of(0, 2), Vec2.of(4, 0))
        assert pts == [(0, 2), (2, 1), (4, 0)]

    def test_degenerate_segment(self):
        assert segment_lattice_points(Vec2.of(3, 5), Vec2.of(3, 5)) == [(3, 5)]

    def test_segment_count_scaling(self):
        p, q = Vec2.of(1, 0), Vec2.of(0, 1)
        assert segment_count(p, q, 1) == 2
        assert segment_count(p, q, 3) == 4

    def test_segment_sum_matches_direct(self):
        p, q = Vec2.of(0, 2), Vec2.of(4, 0)
        f = AffineMap.identity()
        total = segment_f_sum(p, q, f, 2)
        pts = segment_lattice_points(p * 2, q * 2)
        expected_x = Fraction(sum(x for x, _ in pts), 2)
        expected_y = Fraction(sum(y for _, y in pts), 2)
        assert total == Vec2(expected_x, expected_y)

    def test_rational_endpoints_rejected(self):
        with pytest.raises(ValueError):
            segment_lattice_points(Vec2.of(Fraction(1, 2), 0), Vec2.of(1, 0))
