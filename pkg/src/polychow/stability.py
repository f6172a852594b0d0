"""Stability obstructions: averaged-point invariant, symmetry tests, the
unimodular corner-chop sum rule, and the incidence criterion for point
blow-ups of the projective plane.

The averaged-point invariant of a polygon at dilation i is the difference
between the average of the coordinate vector over the sample points and
its average over the polygon; it vanishes for every dilation when the
polarized toric surface is asymptotically Chow semistable. An affine test
function reduces to a dot product with this vector (constants cancel
between the two averages), so the invariant is exposed as a vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import (
    DuplicatePoint,
    EmptyConfiguration,
    GroupClosureOverflow,
    HypothesisNotMet,
)
from .geometry import IntMat2, Polygon, Vec2, ZERO_VEC, area, canonicalize, moment_integral
from .counting import ehrhart_eval, lattice_points, segment_lattice_points, sum_points
from .blowup import Decomposition

GROUP_CLOSURE_CAP = 10_000

FACTORIAL_N_PLUS_1 = 6  # (n+1)! in the plane


def fo_invariant(polygon: Polygon, i: int) -> Vec2:
    """Average of the sample points minus the barycenter, at dilation i."""
    count = ehrhart_eval(polygon, i)
    if count == 0:
        raise HypothesisNotMet(f"no sample points at dilation {i}")
    s = sum_points(polygon, i)
    m = moment_integral(polygon)
    vol = area(polygon)
    return Vec2(s.x / count - m.x / vol, s.y / count - m.y / vol)


def is_centrally_symmetric(polygon: Polygon) -> bool:
    """True when the polygon equals its own point reflection through 0."""
    return canonicalize([-v for v in polygon.vertices]) == polygon


@dataclass(frozen=True)
class SymmetryGroup:
    """A finite subgroup of the determinant-one integer matrices, closed
    under multiplication. Built from generators via `generated_by`."""

    elements: frozenset[IntMat2]

    @classmethod
    def generated_by(cls, generators: list[IntMat2] | tuple[IntMat2, ...],
                     cap: int = GROUP_CLOSURE_CAP) -> "SymmetryGroup":
        for g in generators:
            if g.det() != 1:
                raise ValueError(f"generator {g} must have determinant one")
        elements = {IntMat2.identity()}
        frontier = list(elements)
        while frontier:
            fresh: list[IntMat2] = []
            for known in frontier:
                for g in generators:
                    product = known @ g
                    if product not in elements:
                        elements.add(product)
                        fresh.append(product)
                        if len(elements) > cap:
                            raise GroupClosureOverflow(
                                f"group closure exceeds {cap} elements; "
                                "the generated group is probably infinite"
                            )
            frontier = fresh
        return cls(frozenset(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def element_sum(self) -> IntMat2:
        total = IntMat2(0, 0, 0, 0)
        for g in self.elements:
            total = total + g
        return total


def is_weakly_symmetric(polygon: Polygon, group: SymmetryGroup) -> bool:
    """True when every group element permutes the vertex set and the sum of
    the group elements is the zero matrix (so group-averaging annihilates
    every point of the polygon)."""
    vertex_set = frozenset(polygon.vertices)
    for g in group.elements:
        if frozenset(g.apply(v) for v in vertex_set) != vertex_set:
            return False
    return group.element_sum().is_zero()


def c_constant(polygon: Polygon) -> Fraction:
    """Lattice points per unit area at dilation one; equals (n+1)! for a
    unimodular simplex."""
    return Fraction(ehrhart_eval(polygon, 1)) / area(polygon)


_TEST_FUNCTIONS: tuple[tuple[str, Fraction, Fraction, Fraction], ...] = (
    ("1", Fraction(0), Fraction(0), Fraction(1)),
    ("x1", Fraction(1), Fraction(0), Fraction(0)),
    ("x2", Fraction(0), Fraction(1), Fraction(0)),
)


def _require_sum_rule_hypotheses(decomposition: Decomposition) -> None:
    if decomposition.k != 1:
        raise HypothesisNotMet(
            f"the sum rule needs a lattice chopped polygon (k=1), got k={decomposition.k}"
        )
    if fo_invariant(decomposition.base, 1) != ZERO_VEC:
        raise HypothesisNotMet("the base polygon's averaged-point invariant must vanish")


def sum_rule_residuals(decomposition: Decomposition) -> dict[str, Fraction]:
    """Residuals of the corner-chop sum rule for the test functions
    1, x1, x2.

    For each affine test function the lattice-point sum over the chopped
    polygon is compared with the combination of integrals over the chopped
    polygon, the base, and the cut simplices (weighted by the respective
    points-per-area constants) plus the lattice-point sums over the seams.
    Both sides are enumerated or integrated directly; the residual of a
    decomposition satisfying the hypotheses is zero.
    """
    _require_sum_rule_hypotheses(decomposition)
    d = decomposition
    c_base = c_constant(d.base)
    c_chop = c_constant(d.chopped)

    residuals: dict[str, Fraction] = {}
    for name, cx, cy, c0 in _TEST_FUNCTIONS:
        def ell(x: Fraction, y: Fraction) -> Fraction:
            return cx * x + cy * y + c0

        def integral(polygon: Polygon) -> Fraction:
            m = moment_integral(polygon)
            return cx * m.x + cy * m.y + c0 * area(polygon)

        lhs = sum(ell(Fraction(x), Fraction(y)) for x, y in lattice_points(d.chopped, 1))
        rhs = c_chop * integral(d.chopped)
        rhs += (c_base - c_chop) * integral(d.base)
        rhs += (c_chop - FACTORIAL_N_PLUS_1) * sum(
            (integral(s) for s in d.simplices), Fraction(0)
        )
        for q, r in d.seams:
            rhs += sum(ell(Fraction(x), Fraction(y)) for x, y in segment_lattice_points(q, r))
        residuals[name] = lhs - rhs
    return residuals


def sum_rule_constant_condition(decomposition: Decomposition) -> Fraction:
    """The closed combination that the constant test function reduces the
    sum rule to: weighted areas of base and cut simplices plus the seam
    lattice-point counts. Zero under the sum rule's hypotheses."""
    _require_sum_rule_hypotheses(decomposition)
    d = decomposition
    c_base = c_constant(d.base)
    c_chop = c_constant(d.chopped)
    seam_count = sum(len(segment_lattice_points(q, r)) for q, r in d.seams)
    return (
        (c_base - c_chop) * area(d.base)
        + (c_chop - FACTORIAL_N_PLUS_1) * sum((area(s) for s in d.simplices), Fraction(0))
        + seam_count
    )


def _primitive_triple(raw: tuple[int, int, int]) -> tuple[int, int, int]:
    g = gcd(gcd(abs(raw[0]), abs(raw[1])), abs(raw[2]))
    if g == 0:
        raise ValueError("projective coordinates cannot all vanish")
    triple = (raw[0] // g, raw[1] // g, raw[2] // g)
    for coord in triple:
        if coord != 0:
            return triple if coord > 0 else (-triple[0], -triple[1], -triple[2])
    raise ValueError("projective coordinates cannot all vanish")


@dataclass(frozen=True)
class PointConfiguration:
    """Pairwise-distinct points of the projective plane, stored as primitive
    integer triples with canonical sign."""

    points: tuple[tuple[int, int, int], ...]

    @staticmethod
    def of(rows) -> "PointConfiguration":
        normalized = []
        for row in rows:
            if len(row) != 3:
                raise ValueError(f"projective point needs three coordinates: {row!r}")
            if any(isinstance(c, float) for c in row):
                raise ValueError("projective coordinates must be exact rationals")
            fracs = [Fraction(c) for c in row]
            common = lcm(*(c.denominator for c in fracs))
            normalized.append(_primitive_triple(tuple(int(c * common) for c in fracs)))
        if len(set(normalized)) != len(normalized):
            raise DuplicatePoint("projective points must be pairwise distinct")
        return PointConfiguration(tuple(normalized))

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class MukaiWitness:
    """The extremal candidate subspace of the incidence test."""

    dim: int
    coordinates: tuple[int, int, int]  # point, or line as primitive dual triple
    incident: int
    ratio: Fraction
    bound: Fraction


@dataclass(frozen=True)
class MukaiResult:
    verdict: str  # "Stable" | "Unstable" | "Borderline"
    witness: MukaiWitness


def _cross3(u, v) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def mukai_classify(configuration: PointConfiguration) -> MukaiResult:
    """Incidence test for Chow stability of the plane blown up at a point
    configuration.

    Candidates are the single points (dimension 0) and the lines through at
    least two configuration points (dimension 1, deduplicated by primitive
    dual coordinates). The blow-up is stable when every candidate V
    satisfies #(incident)/#(points) < (dim V + 1)/3 strictly, unstable when
    some candidate reverses the inequality strictly, and borderline when
    equality is attained but never exceeded. The witness is the candidate
    with the largest margin, ties broken by dimension then lexicographic
    coordinates.
    """
    count = len(configuration)
    if count == 0:
        raise EmptyConfiguration("need at least one point")

    candidates: list[tuple[int, tuple[int, int, int], int]] = [
        (0, p, 1) for p in configuration.points
    ]
    lines: dict[tuple[int, int, int], int] = {}
    for p, q in combinations(configuration.points, 2):
        line = _primitive_triple(_cross3(p, q))
        if line not in lines:
            lines[line] = sum(
                1
                for r in configuration.points
                if line[0] * r[0] + line[1] * r[1] + line[2] * r[2] == 0
            )
    candidates.extend((1, line, incident) for line, incident in lines.items())

    def margin(candidate) -> Fraction:
        dim, _, incident = candidate
        return Fraction(incident, count) - Fraction(dim + 1, 3)

    top_margin = max(margin(c) for c in candidates)
    tied = [c for c in candidates if margin(c) == top_margin]
    dim, coords, incident = min(tied, key=lambda c: (c[0], c[1]))

    if top_margin > 0:
        verdict = "Unstable"
    elif top_margin == 0:
        verdict = "Borderline"
    else:
        verdict = "Stable"
    witness = MukaiWitness(
        dim=dim,
        coordinates=coords,
        incident=incident,
        ratio=Fraction(incident, count),
        bound=Fraction(dim + 1, 3),
    )
    return MukaiResult(verdict=verdict, witness=witness)
