from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from corpus import delzant_corpus, random_unimodular
from polychow import (
    AffineMap,
    Polygon,
    Vec2,
    apply_affine,
    area,
    boundary_lattice_length,
    canonicalize,
    chow_eval,
    corner_frame,
    ehrhart_eval,
    ehrhart_poly,
    is_delzant,
    lattice_points,
    moment_integral,
    scale,
    sum_points,
    sum_poly,
    translate,
)

ID = AffineMap.identity()

CORPUS = delzant_corpus(size=24)


@pytest.mark.parametrize("polygon", CORPUS[:12], ids=lambda p: str(hash(p) % 10**6))
def test_counting_polynomials_match_enumeration(polygon):
    e = ehrhart_poly(polygon)
    s = sum_poly(polygon)
    for i in (1, 2, 5):
        assert e(i) == ehrhart_eval(polygon, i)
        assert s(i) == sum_points(polygon, i)


@pytest.mark.parametrize("polygon", CORPUS[:10], ids=lambda p: str(hash(p) % 10**6))
def test_picks_theorem(polygon):
    boundary = boundary_lattice_length(polygon)
    assert boundary.denominator == 1
    coords = [v.as_tuple() for v in polygon.vertices]
    assert boundary == len(brute.boundary_points(coords))
    assert ehrhart_eval(polygon, 1) == area(polygon) + boundary / 2 + 1


@pytest.mark.parametrize("polygon", CORPUS[:8], ids=lambda p: str(hash(p) % 10**6))
def test_corner_frames_positive(polygon):
    for i in range(len(polygon)):
        assert corner_frame(polygon, i).det() == 1


def test_chow_laws_on_corpus():
    rng = random.Random(3)
    for polygon in CORPUS[:8]:
        offset = Vec2.of(rng.randint(-2, 2), rng.randint(-2, 2))
        u = random_unimodular(rng, 2)
        for i in (1, 2):
            base = chow_eval(polygon, ID, i)
            assert chow_eval(translate(polygon, offset), ID, i) == base
            assert chow_eval(apply_affine(polygon, AffineMap.from_int_mat(u)), ID, i) == u.apply(base)
        for k in (2, 3):
            assert chow_eval(scale(polygon, k), ID, 1) == chow_eval(polygon, ID, k) * Fraction(k**3)


def test_delzant_preserved_by_corpus_transforms():
    for polygon in CORPUS:
        assert is_delzant(polygon)


@given(
    st.lists(
        st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
        min_size=3,
        max_size=12,
    )
)
@settings(max_examples=60, deadline=None)
def test_canonicalize_is_idempotent_and_contains_input(points):
    vecs = [Vec2.of(x, y) for x, y in points]
    try:
        polygon = canonicalize(vecs)
    except Exception:
        return  # degenerate input sets are fine to reject
    assert canonicalize(polygon.vertices) == polygon
    assert area(polygon) > 0
    coords = [v.as_tuple() for v in polygon.vertices]
    for x, y in points:
        assert brute.contains(coords, Fraction(x), Fraction(y))


@given(st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=20, deadline=None)
def test_dilation_composition(k, i):
    polygon = Polygon.from_coords([(0, 0), (2, 0), (2, 1), (0, 1)])
    assert ehrhart_eval(scale(polygon, k), i) == ehrhart_eval(polygon, k * i)
    assert sum_points(scale(polygon, k), i) == sum_points(polygon, k * i) * Fraction(k)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_translation_moves_points(dx, dy, i):
    polygon = Polygon.from_coords([(0, 0), (3, 0), (0, 3)])
    moved = translate(polygon, Vec2.of(dx, dy))
    shifted = {(x + i * dx, y + i * dy) for x, y in lattice_points(polygon, i)}
    assert shifted == set(lattice_points(moved, i))


def test_moment_against_green_oracle_on_corpus():
    for polygon in CORPUS[:10]:
        coords = [v.as_tuple() for v in polygon.vertices]
        assert moment_integral(polygon).as_tuple() == brute.green_moment(coords)
        assert area(polygon) == brute.shoelace_area(coords)
