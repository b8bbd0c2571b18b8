"""Exact planar primitives: rational points, orientation, and crossing predicates.

Every decision predicate runs on ``fractions.Fraction``, so answers are exact.
Floating point appears in exactly one place, :func:`oriented_angle`, which is
kept as a cross-check oracle and never used to make decisions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional, Union

Coord = Union[int, str, float, Fraction]


class GeneralPositionError(Exception):
    """A degenerate configuration the caller promised to rule out.

    Raised instead of guessing: a vertex on a ray, a segment collinear with a
    ray's supporting line, or a crossing through the ray origin never produce
    a silent answer.
    """


def _frac(value: Coord) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __init__(self, x: Coord, y: Coord) -> None:
        object.__setattr__(self, "x", _frac(x))
        object.__setattr__(self, "y", _frac(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, k: Coord) -> "Point":
        k = _frac(k)
        return Point(self.x * k, self.y * k)

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    @property
    def is_degenerate(self) -> bool:
        return self.start == self.end


@dataclass(frozen=True)
class Ray:
    """Half-line from ``origin`` along an integer direction vector.

    The direction is normalized to lowest terms (gcd 1) but keeps its sign:
    ``(0, -2)`` and ``(0, -1)`` are the same ray, ``(0, 1)`` is not.
    """

    origin: Point
    direction: tuple[int, int]

    def __init__(self, origin: Point, direction: tuple[int, int]) -> None:
        dx, dy = direction
        if dx == 0 and dy == 0:
            raise ValueError("ray direction must be nonzero")
        if not (isinstance(dx, int) and isinstance(dy, int)):
            raise TypeError("ray direction components must be integers")
        g = gcd(abs(dx), abs(dy))
        object.__setattr__(self, "origin", origin)
        object.__setattr__(self, "direction", (dx // g, dy // g))

    def point_at(self, s: Coord) -> Point:
        s = _frac(s)
        dx, dy = self.direction
        return Point(self.origin.x + s * dx, self.origin.y + s * dy)


class Orientation(Enum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Exact cross product (a - o) x (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orient(a: Point, b: Point, c: Point) -> Orientation:
    """Orientation of the ordered triple: positive cross product means CCW."""
    v = cross(a, b, c)
    if v > 0:
        return Orientation.CCW
    if v < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def point_on_segment(p: Point, s: Segment) -> bool:
    """Whether ``p`` lies on ``s``, endpoints included; exact."""
    if cross(s.start, s.end, p) != 0:
        return False
    return (
        min(s.start.x, s.end.x) <= p.x <= max(s.start.x, s.end.x)
        and min(s.start.y, s.end.y) <= p.y <= max(s.start.y, s.end.y)
    )


def hull3_contains(a: Point, b: Point, c: Point, p: Point) -> bool:
    """Whether ``p`` lies in the convex hull of three points, boundary included.

    Degenerate hulls are handled exactly: a collinear triple's hull is the
    spanning segment, a coincident triple's hull is the point itself.
    """
    o = cross(a, b, c)
    if o == 0:
        return (
            point_on_segment(p, Segment(a, b))
            or point_on_segment(p, Segment(b, c))
            or point_on_segment(p, Segment(a, c))
        )
    d1 = cross(a, b, p)
    d2 = cross(b, c, p)
    d3 = cross(c, a, p)
    if o > 0:
        return d1 >= 0 and d2 >= 0 and d3 >= 0
    return d1 <= 0 and d2 <= 0 and d3 <= 0


def point_on_ray(p: Point, r: Ray) -> bool:
    """Whether ``p`` lies on the closed half-line ``r`` (origin included)."""
    dx, dy = r.direction
    w = p - r.origin
    return w.x * dy - w.y * dx == 0 and w.x * dx + w.y * dy >= 0


def segment_ray_crossing(s: Segment, r: Ray) -> Optional[tuple[Fraction, int]]:
    """Transversal crossing of a segment with a ray, or ``None``.

    Returns ``(t, sign)`` where ``t`` in (0, 1) is the crossing parameter
    along the segment and ``sign`` is +1 when the segment passes from the
    ray's right half-plane to its left half-plane (the segment's endpoint
    sits CCW of the ray), -1 otherwise.

    Raises :class:`GeneralPositionError` for the configurations callers must
    rule out: a segment endpoint on the ray, a segment collinear with the
    ray's supporting line, or a crossing through the ray origin.
    """
    for endpoint in (s.start, s.end):
        if point_on_ray(endpoint, r):
            raise GeneralPositionError(f"segment endpoint {endpoint} lies on the ray")
    if s.is_degenerate:
        return None
    o = r.origin
    dx, dy = r.direction
    ux = s.end.x - s.start.x
    uy = s.end.y - s.start.y
    wx = s.start.x - o.x
    wy = s.start.y - o.y
    denom = ux * dy - uy * dx
    if denom == 0:
        if wx * dy - wy * dx == 0:
            raise GeneralPositionError("segment is collinear with the ray's supporting line")
        return None
    t = -(wx * dy - wy * dx) / denom
    if not 0 < t < 1:
        return None
    hx = wx + t * ux
    hy = wy + t * uy
    along = hx * dx + hy * dy
    if along < 0:
        return None
    if along == 0:
        raise GeneralPositionError("segment crosses through the ray origin")
    side = dx * (s.end.y - o.y) - dy * (s.end.x - o.x)
    assert side != 0
    return t, 1 if side > 0 else -1


def oriented_angle(a: Point, o: Point, b: Point) -> float:
    """Oriented angle AOB in (-pi, pi], as a float.

    The value is the rotation taking the direction of OA to the direction of
    OB; opposite directions give +pi, never -pi. Cross-check oracle only.
    """
    va = a - o
    vb = b - o
    if va.x == 0 and va.y == 0:
        raise ValueError("first angle endpoint coincides with the vertex")
    if vb.x == 0 and vb.y == 0:
        raise ValueError("second angle endpoint coincides with the vertex")
    cr = va.x * vb.y - va.y * vb.x
    dt = va.x * vb.x + va.y * vb.y
    return math.atan2(float(cr), float(dt))
