"""Simplicity certificates for closed geodesics and cusp depth bounds.

A closed geodesic downstairs lifts to the orbit of its axis upstairs, so
self-intersection is visible as a group translate of the axis that crosses
it.  Scanning every translate by words up to a length bound either produces
such a crossing (a certificate of non-simplicity) or a positive lower bound
on the distance to all inspected translates, half of which bounds the radius
of an embedded tube around the geodesic.

The cusp depth functions convert between the length of the shortest
parabolic-translate loop on a horoball and how far that horoball must be
pushed in before those loops reach length one.
"""

import math

from .enumeration import enumerate_ball
from .errors import OutOfRange
from .geometry import (
    INTERSECTION_TOL,
    geodesic_separation,
    same_line,
    transform_line,
)
from .isometry import TOL_TRACE


class SimplicityReport:
    """Outcome of the translate scan for one axis."""

    __slots__ = ("verdict", "witness", "distance", "angle", "tube_radius_lower")

    def __init__(
        self, verdict, witness=None, distance=None, angle=None,
        tube_radius_lower=None,
    ):
        self.verdict = verdict
        self.witness = witness
        self.distance = distance
        self.angle = angle
        self.tube_radius_lower = tube_radius_lower

    @property
    def is_simple(self):
        return self.verdict == "simple_up_to_bound"

    def __repr__(self):
        if self.is_simple:
            return "SimplicityReport(simple_up_to_bound, tube>=%r)" % (
                self.tube_radius_lower,
            )
        return "SimplicityReport(self_intersecting, witness=%r)" % (
            self.witness.name if self.witness else None,
        )


def simplicity_check(group, axis, max_word_len, tol_trace=TOL_TRACE, ball=None):
    """Scan ball translates of the axis for a crossing.

    Words fixing the axis setwise are stabilizers and prove nothing.  A
    translate at distance below the intersection tolerance (including
    asymptotic translates sharing one ideal endpoint) is returned as
    self-intersection evidence with the first witness in shortlex order.
    Otherwise the geodesic is simple up to this bound and half the smallest
    translate distance is a tube radius bound (infinite when the whole ball
    stabilizes the axis).
    """
    if ball is None:
        ball = enumerate_ball(group, max_word_len)
    closest = math.inf
    for word in ball:
        translate = transform_line(word.matrix, axis)
        if same_line(translate, axis):
            continue
        sep = geodesic_separation(translate, axis)
        if sep.distance < INTERSECTION_TOL:
            return SimplicityReport(
                "self_intersecting",
                witness=word,
                distance=sep.distance,
                angle=sep.angle,
            )
        closest = min(closest, sep.distance)
    bound = closest / 2.0 if closest < math.inf else math.inf
    return SimplicityReport("simple_up_to_bound", tube_radius_lower=bound)


def margulis_filter(entries, epsilon=0.1):
    """Spectrum entries shorter than the chosen thinness threshold."""
    if epsilon <= 0:
        raise OutOfRange("threshold must be positive, got %r" % (epsilon,))
    return [e for e in entries if e.length < epsilon]


def cusp_depth(delta):
    """Depth at which horoball loops of length delta shrink to length one.

    A loop of length delta on the boundary horosphere subtends a geodesic
    arc of length 2 sinh(delta / 2), and pushing distance d into the cusp
    scales horospherical lengths by exp(-d); the returned depth makes the
    product equal to one.
    """
    if not 0.0 < delta < 1.0:
        raise OutOfRange("loop length must lie in (0, 1), got %r" % (delta,))
    return -math.log(2.0 * math.sinh(delta / 2.0))


def max_parabolic_length_at_depth(depth):
    """Longest horoball loop that still closes up short at the given depth.

    Inverse of cusp_depth: at depth d every parabolic translation of length
    at most 2 asinh(exp(-d) / 2) stays within the unit-length thin part.
    """
    if depth < 0.0:
        raise OutOfRange("depth must be nonnegative, got %r" % (depth,))
    return 2.0 * math.asinh(math.exp(-depth) / 2.0)
