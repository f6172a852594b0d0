"""Exception taxonomy.

Every error raised by the library derives from PolychowError so callers
can catch the whole family. The CLI maps input/validation errors to exit
code 1 and mathematical verification mismatches to exit code 2.
"""

from __future__ import annotations


class PolychowError(Exception):
    """Base class for all library errors."""


class DegeneratePolytope(PolychowError):
    """Input points do not span a two-dimensional convex region."""


class NotDelzant(PolychowError):
    """Primitive edge directions at a vertex do not form a lattice basis."""


class NotLatticePolygon(PolychowError):
    """Operation requires all vertices to be integral."""


class InternalInconsistency(PolychowError):
    """A closed form disagreed with direct enumeration.

    This is deliberately fatal: enumeration is the single source of truth,
    and a mismatch means a convention bug, not bad input.
    """


class EnumerationLimitExceeded(PolychowError):
    """Lattice-point enumeration would exceed the configured point budget."""


class InvalidCutVertex(PolychowError):
    """A corner cut names a point that is not a (distinct) vertex of the base."""


class InvalidCutDepth(PolychowError):
    """A corner-cut depth is not positive or does not give an integral depth
    after scaling by the minimal lattice multiple of the chopped polygon."""


class CutThroughEdge(PolychowError):
    """A corner cut reaches or passes an adjacent vertex."""


class OverlappingCuts(PolychowError):
    """Two corner simplices intersect."""


class VerificationMismatch(PolychowError):
    """The blow-up identity failed at some dilation factor.

    Carries the first differing dilation `i`, both sides, and the full
    per-i report assembled so far.
    """

    def __init__(self, i, lhs, rhs, report=None):
        super().__init__(f"blow-up identity fails at i={i}: {lhs} != {rhs}")
        self.i = i
        self.lhs = lhs
        self.rhs = rhs
        self.report = report


class HypothesisNotMet(PolychowError):
    """A decomposition does not satisfy the preconditions of the sum rule."""


class GroupClosureOverflow(PolychowError):
    """Group closure exceeded the configured element cap."""


class EmptyConfiguration(PolychowError):
    """A point configuration must contain at least one point."""


class DuplicatePoint(PolychowError):
    """Projective points in a configuration must be pairwise distinct."""


class ParseError(PolychowError):
    """An input file is malformed; the message carries the offending position."""
