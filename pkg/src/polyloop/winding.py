"""Winding numbers from exact signed ray crossings.

The winding number of a closed polygonal loop around a point is computed by
summing crossing signs along a ray chosen in general position; the classical
angle-sum definition is kept as a floating-point oracle. Sign convention: a
counterclockwise convex outline winds +1 around an interior point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

from .geometry import (
    GeneralPositionError,
    Point,
    Ray,
    Segment,
    oriented_angle,
    point_on_segment,
    segment_ray_crossing,
)

TAU = 6.283185307179586


class PointOnPolylineError(ValueError):
    """The query point lies on a segment of the polyline."""


@dataclass(frozen=True)
class ClosedPolyline:
    """Oriented cyclic sequence of points; duplicates and self-crossings allowed.

    Two loops are equal when their vertex sequences agree up to a cyclic
    shift.
    """

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Iterable[Point]) -> None:
        vs = tuple(vertices)
        if not vs:
            raise ValueError("a closed polyline needs at least one vertex")
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosedPolyline):
            return NotImplemented
        return least_rotation(self.vertices) == least_rotation(other.vertices)

    def __hash__(self) -> int:
        return hash(least_rotation(self.vertices))

    def reversed(self) -> "ClosedPolyline":
        return ClosedPolyline(self.vertices[::-1])


def least_rotation(seq: tuple) -> tuple:
    """Lexicographically least cyclic rotation of a tuple."""
    if len(seq) <= 1:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def polyline_edges(line) -> list[Segment]:
    """Traversal edges of a polyline, wrapping from the last vertex to the first.

    Works for closed and based polylines alike: a based loop is traversed
    from the basepoint back around to it.
    """
    vs = line.vertices
    m = len(vs)
    return [Segment(vs[i], vs[(i + 1) % m]) for i in range(m)]


class Crossing(NamedTuple):
    edge: int
    t: Fraction
    sign: int


def ray_crossings(line, ray: Ray) -> list[Crossing]:
    """All transversal crossings of a polyline with a ray, in traversal order."""
    crossings = []
    for i, seg in enumerate(polyline_edges(line)):
        hit = segment_ray_crossing(seg, ray)
        if hit is not None:
            crossings.append(Crossing(i, hit[0], hit[1]))
    return crossings


def direction_candidates() -> Iterator[tuple[int, int]]:
    """Fixed search sequence of downward ray directions: (0,-1), (1,-k), (-1,-k)."""
    yield (0, -1)
    k = 1
    while True:
        yield (1, -k)
        yield (-1, -k)
        k += 1


def direction_is_valid(d: tuple[int, int], origins: Sequence[Point], lines: Iterable) -> bool:
    """Whether parallel rays along ``d`` from ``origins`` are in general position.

    Required: no two origins aligned along ``d`` (so the rays are disjoint and
    miss each other's origins), no ray through a vertex of any line, and no
    edge collinear with a ray's supporting line.
    """
    dx, dy = d
    for o1, o2 in itertools.combinations(origins, 2):
        w = o2 - o1
        if w.x * dy - w.y * dx == 0:
            return False
    lines = list(lines)
    for o in origins:
        for line in lines:
            for v in line.vertices:
                w = v - o
                if w.x * dy - w.y * dx == 0 and w.x * dx + w.y * dy >= 0:
                    return False
            for seg in polyline_edges(line):
                if seg.is_degenerate:
                    continue
                ux = seg.end.x - seg.start.x
                uy = seg.end.y - seg.start.y
                if ux * dy - uy * dx != 0:
                    continue
                w = seg.start - o
                if w.x * dy - w.y * dx == 0:
                    return False
    return True


def valid_directions(origins: Sequence[Point], lines: Iterable, count: int = 1) -> list[tuple[int, int]]:
    """First ``count`` candidate directions in general position for the scene.

    Terminates for any finite scene: each constraint rules out finitely many
    directions and the candidate sequence has infinitely many distinct slopes.
    """
    lines = list(lines)
    found = []
    for d in direction_candidates():
        if direction_is_valid(d, origins, lines):
            found.append(d)
            if len(found) == count:
                return found
    raise AssertionError("unreachable: direction search is infinite")


def _require_off_line(line, o: Point) -> None:
    for seg in polyline_edges(line):
        if point_on_segment(o, seg):
            raise PointOnPolylineError(f"point {o} lies on the polyline")


def winding_number(line: ClosedPolyline, o: Point) -> int:
    """Exact winding number of the loop around ``o``.

    A general-position ray from ``o`` is chosen deterministically and the
    crossing signs are summed; the result does not depend on the choice.
    """
    _require_off_line(line, o)
    (d,) = valid_directions([o], [line])
    return sum(c.sign for c in ray_crossings(line, Ray(o, d)))


def winding_number_angle_oracle(line: ClosedPolyline, o: Point) -> float:
    """Angle-sum form of the winding number, in floating point.

    Sums the oriented angles subtended at ``o`` by consecutive vertices and
    divides by 2*pi. Always within rounding error of the exact integer.
    """
    _require_off_line(line, o)
    vs = line.vertices
    m = len(vs)
    total = 0.0
    for i in range(m):
        a, b = vs[i], vs[(i + 1) % m]
        if a == b:
            continue
        total += oriented_angle(a, o, b)
    return total / TAU


def crossing_parity(line: ClosedPolyline, ray: Ray) -> int:
    """Parity (0 or 1) of the number of segments of the loop crossing the ray.

    The ray must be in general position: through no vertex, origin off the
    loop, no edge collinear with its supporting line.
    """
    _require_off_line(line, ray.origin)
    if not direction_is_valid(ray.direction, [ray.origin], [line]):
        raise GeneralPositionError("ray is not in general position w.r.t. the polyline")
    return len(ray_crossings(line, ray)) % 2


def classify_one_puncture(line: ClosedPolyline, o: Point) -> int:
    """Homotopy class of a loop in the plane minus the single point ``o``.

    The winding number is a complete invariant there: two loops are homotopic
    iff the values agree, and a loop contracts to a point iff the value is 0.
    """
    return winding_number(line, o)
