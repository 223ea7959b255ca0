"""Planar primitives and predicates shared by every structure in the package.

The numeric policy is deliberately simple: coordinates live in a bounded
domain (|x|, |y| <= COORD_LIMIT) and all comparisons use fixed absolute
epsilons.  EPS_AREA guards orientation determinants, EPS_DIST guards
point and distance comparisons.  Exact arithmetic is out of scope; the
bounded domain is what keeps the fixed epsilons meaningful.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

EPS_AREA = 1e-9
EPS_DIST = 1e-9
COORD_LIMIT = 1e6


class GeometryError(ValueError):
    """An input violated a documented geometric precondition."""


class Orientation(enum.Enum):
    CCW = 1
    CW = -1
    COLLINEAR = 0


class PointLocation(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True, slots=True)
class Point:
    """A point in the plane with finite coordinates within +/-COORD_LIMIT."""

    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError("point coordinates must be finite")
        if abs(self.x) > COORD_LIMIT or abs(self.y) > COORD_LIMIT:
            raise GeometryError(
                "point coordinates must satisfy |x|, |y| <= %g" % COORD_LIMIT
            )


def distance(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def points_equal(p: Point, q: Point, tol: float = EPS_DIST) -> bool:
    """Equality under the distance epsilon."""
    return math.hypot(p.x - q.x, p.y - q.y) <= tol


def cross(p: Point, q: Point, r: Point) -> float:
    """Signed area determinant of the parallelogram (q - p, r - p).

    Positive when p, q, r make a counterclockwise turn.
    """
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    d = cross(p, q, r)
    if abs(d) <= EPS_AREA:
        return Orientation.COLLINEAR
    return Orientation.CCW if d > 0.0 else Orientation.CW


@dataclass(frozen=True, slots=True)
class Segment:
    """A closed segment between two distinct endpoints."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        if points_equal(self.a, self.b):
            raise GeometryError("degenerate segment: endpoints coincide")

    def reversed(self) -> Segment:
        return Segment(self.b, self.a)


@dataclass(frozen=True, slots=True)
class BBox:
    """An axis-aligned box with positive extent on both axes."""

    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self) -> None:
        for v in (self.xmin, self.ymin, self.xmax, self.ymax):
            if not math.isfinite(v):
                raise GeometryError("bbox bounds must be finite")
        object.__setattr__(self, "xmin", float(self.xmin))
        object.__setattr__(self, "ymin", float(self.ymin))
        object.__setattr__(self, "xmax", float(self.xmax))
        object.__setattr__(self, "ymax", float(self.ymax))
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise GeometryError("bbox must satisfy xmin < xmax and ymin < ymax")

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    @property
    def center(self) -> Point:
        return Point((self.xmin + self.xmax) / 2.0, (self.ymin + self.ymax) / 2.0)

    def area(self) -> float:
        return self.width * self.height

    def contains(self, p: Point, tol: float = EPS_DIST) -> bool:
        return (
            self.xmin - tol <= p.x <= self.xmax + tol
            and self.ymin - tol <= p.y <= self.ymax + tol
        )


@dataclass(frozen=True, slots=True)
class Halfplane:
    """The closed halfplane {p : nx*p.x + ny*p.y <= c} with unit normal."""

    nx: float
    ny: float
    c: float

    def __post_init__(self) -> None:
        n2 = self.nx * self.nx + self.ny * self.ny
        if abs(n2 - 1.0) > 1e-12:
            raise GeometryError("halfplane normal must be a unit vector")
        if not math.isfinite(self.c):
            raise GeometryError("halfplane offset must be finite")

    def value(self, p: Point) -> float:
        """Signed distance-like value; <= 0 means p is inside."""
        return self.nx * p.x + self.ny * p.y - self.c

    def complement(self) -> Halfplane:
        return Halfplane(-self.nx, -self.ny, -self.c)


def _signed_area2(vertices) -> float:
    """Twice the signed area of a closed vertex loop."""
    total = 0.0
    n = len(vertices)
    for i in range(n):
        p = vertices[i]
        q = vertices[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


def _turning_is_convex_ccw(vertices) -> bool:
    """True when the loop is convex, counterclockwise, and winds exactly once.

    A convex single-winding loop without spikes or duplicate consecutive
    vertices is necessarily simple, which lets Polygon skip the quadratic
    intersection scan for the common convex case.
    """
    n = len(vertices)
    turning = 0.0
    for i in range(n):
        a = vertices[i - 1]
        b = vertices[i]
        c = vertices[(i + 1) % n]
        cr = cross(a, b, c)
        if cr < -EPS_AREA:
            return False
        dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y)
        turning += math.atan2(cr, dot)
    return abs(turning - 2.0 * math.pi) < 1e-6


def _segments_touch(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True when the closed segments share any point (within EPS_DIST)."""
    o1 = cross(q1, q2, p1)
    o2 = cross(q1, q2, p2)
    o3 = cross(p1, p2, q1)
    o4 = cross(p1, p2, q2)
    if (
        ((o1 > EPS_AREA and o2 < -EPS_AREA) or (o1 < -EPS_AREA and o2 > EPS_AREA))
        and ((o3 > EPS_AREA and o4 < -EPS_AREA) or (o3 < -EPS_AREA and o4 > EPS_AREA))
    ):
        return True
    return (
        point_segment_distance(p1, q1, q2) <= EPS_DIST
        or point_segment_distance(p2, q1, q2) <= EPS_DIST
        or point_segment_distance(q1, p1, p2) <= EPS_DIST
        or point_segment_distance(q2, p1, p2) <= EPS_DIST
    )


@dataclass(frozen=True, slots=True)
class Polygon:
    """A simple polygon stored counterclockwise.

    The constructor accepts either winding direction, normalizes to
    counterclockwise, and rejects inputs that are degenerate (fewer than
    three vertices, consecutive duplicates, zero area, zero-angle spikes)
    or self-intersecting.  The simplicity check is quadratic in the vertex
    count; convex inputs are recognized in linear time and skip it.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        if len(verts) < 3:
            raise GeometryError("polygon needs at least 3 vertices")
        n = len(verts)
        for i in range(n):
            if points_equal(verts[i], verts[(i + 1) % n]):
                raise GeometryError("polygon has consecutive duplicate vertices")
        area2 = _signed_area2(verts)
        if abs(area2) <= 2.0 * EPS_AREA:
            raise GeometryError("degenerate polygon: zero area")
        if area2 < 0.0:
            verts = verts[::-1]
        for i in range(n):
            a = verts[i - 1]
            b = verts[i]
            c = verts[(i + 1) % n]
            if abs(cross(a, b, c)) <= EPS_AREA:
                dot = (a.x - b.x) * (c.x - b.x) + (a.y - b.y) * (c.y - b.y)
                if dot > 0.0:
                    raise GeometryError("self-intersecting polygon: spike vertex")
        if not _turning_is_convex_ccw(verts):
            for i in range(n):
                a1 = verts[i]
                a2 = verts[(i + 1) % n]
                for j in range(i + 1, n):
                    if j == i or (j + 1) % n == i or (i + 1) % n == j:
                        continue
                    b1 = verts[j]
                    b2 = verts[(j + 1) % n]
                    if _segments_touch(a1, a2, b1, b2):
                        raise GeometryError(
                            "self-intersecting polygon: edges %d and %d touch"
                            % (i, j)
                        )
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def _unchecked(cls, vertices) -> Polygon:
        """Wrap vertices the caller already knows form a simple CCW loop."""
        poly = object.__new__(cls)
        object.__setattr__(poly, "vertices", tuple(vertices))
        return poly

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]


def polygon_area(poly: Polygon) -> float:
    """Area of the polygon (positive; vertices are counterclockwise)."""
    return 0.5 * _signed_area2(poly.vertices)


def polygon_bbox(poly: Polygon) -> BBox:
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    return BBox(min(xs), min(ys), max(xs), max(ys))


def polygon_is_convex(poly: Polygon) -> bool:
    """True when no vertex makes a clockwise turn (collinear runs allowed)."""
    verts = poly.vertices
    n = len(verts)
    for i in range(n):
        if cross(verts[i - 1], verts[i], verts[(i + 1) % n]) < -EPS_AREA:
            return False
    return True


def point_segment_distance(p: Point, a: Point, b: Point) -> float:
    ax, ay = a.x, a.y
    dx = b.x - ax
    dy = b.y - ay
    px = p.x - ax
    py = p.y - ay
    denom = dx * dx + dy * dy
    if denom <= 0.0:
        return math.hypot(px, py)
    t = (px * dx + py * dy) / denom
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(px - t * dx, py - t * dy)


def convex_hull(points) -> list[Point]:
    """Convex hull in counterclockwise order.

    The walk starts at the lexicographically smallest point.  Points in
    the interior of hull edges are excluded: only strict corners appear.
    Degenerate inputs yield degenerate hulls (a single point, or the two
    extremes of a collinear set) rather than an error.
    """
    pts = list(points)
    if not pts:
        raise GeometryError("empty point set")
    unique = sorted({(p.x, p.y) for p in pts})
    if len(unique) == 1:
        return [Point(*unique[0])]
    pts = [Point(x, y) for x, y in unique]

    def build(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= EPS_AREA:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(reversed(pts))
    return lower[:-1] + upper[:-1]


def angle_at(v1: Point, v3: Point, v2: Point) -> float:
    """Angle subtended at v3 by v1 and v2, in [0, pi]."""
    ax = v1.x - v3.x
    ay = v1.y - v3.y
    bx = v2.x - v3.x
    by = v2.y - v3.y
    if math.hypot(ax, ay) <= EPS_DIST or math.hypot(bx, by) <= EPS_DIST:
        raise GeometryError("degenerate angle: apex coincides with an endpoint")
    return math.atan2(abs(ax * by - ay * bx), ax * bx + ay * by)


def clip_halfplane(poly: Polygon, half: Halfplane) -> Polygon | None:
    """Intersection of a convex polygon with a closed halfplane.

    Returns None when the intersection has (near) zero area.  Non-convex
    input is rejected: single-plane clipping of a non-convex polygon can
    produce several pieces, which this representation cannot hold.
    """
    if not polygon_is_convex(poly):
        raise GeometryError("clip requires convex polygon")
    verts = poly.vertices
    vals = [half.value(v) for v in verts]
    out: list[Point] = []
    n = len(verts)
    for i in range(n):
        s, e = verts[i], verts[(i + 1) % n]
        vs, ve = vals[i], vals[(i + 1) % n]
        if vs <= EPS_DIST:
            out.append(s)
            if ve > EPS_DIST and vs < -EPS_DIST:
                t = vs / (vs - ve)
                out.append(Point(s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)))
        elif ve < -EPS_DIST:
            t = vs / (vs - ve)
            out.append(Point(s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)))
    cleaned: list[Point] = []
    for p in out:
        if not cleaned or not points_equal(cleaned[-1], p):
            cleaned.append(p)
    if len(cleaned) >= 2 and points_equal(cleaned[0], cleaned[-1]):
        cleaned.pop()
    if len(cleaned) < 3:
        return None
    if abs(_signed_area2(cleaned)) <= 2.0 * EPS_AREA:
        return None
    return Polygon._unchecked(cleaned)


def point_in_polygon(p: Point, poly: Polygon) -> PointLocation:
    """Locate a point relative to a simple polygon.

    Boundary means within EPS_DIST of some edge; otherwise ray-casting
    parity decides between inside and outside.
    """
    verts = poly.vertices
    n = len(verts)
    for i in range(n):
        if point_segment_distance(p, verts[i], verts[(i + 1) % n]) <= EPS_DIST:
            return PointLocation.BOUNDARY
    inside = False
    x, y = p.x, p.y
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        if (a.y > y) != (b.y > y):
            xint = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x < xint:
                inside = not inside
    return PointLocation.INSIDE if inside else PointLocation.OUTSIDE
