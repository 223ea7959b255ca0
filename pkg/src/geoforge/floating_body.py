"""Floating bodies of convex polygons.

For a direction phi and an area fraction delta, the cut halfplane is the
side of a line that keeps all but delta of the polygon's area; the cap cut
off has area exactly delta * A.  The offset of the line is found by
bisection on the (continuous, monotone, piecewise quadratic) cap area, so
there is no per-edge case analysis to get wrong.

Sweeping phi over a uniform grid yields two structures: the locus of
chord midpoints (the wet part's waterline midpoint for every heel angle)
and the intersection of all cut halfplanes.  The midpoint locus need not
be convex; the halfplane intersection always is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    EPS_AREA,
    EPS_DIST,
    GeometryError,
    Halfplane,
    Point,
    Polygon,
    polygon_area,
    polygon_bbox,
    polygon_is_convex,
    points_equal,
)

_AREA_TOL = 1e-9
_BRACKET_TOL = 1e-12


@dataclass(frozen=True)
class AreaFraction:
    delta: float

    def __post_init__(self) -> None:
        d = float(self.delta)
        if not (math.isfinite(d) and 0.0 < d <= 0.5):
            raise GeometryError("delta must be in (0, 0.5]")
        object.__setattr__(self, "delta", d)


@dataclass(frozen=True)
class FloatingBodyResult:
    delta: float
    directions: int
    dupin: tuple[Point, ...]
    convex_fb: Polygon | None
    is_dupin_convex: bool


def _coerce_delta(delta) -> float:
    if isinstance(delta, AreaFraction):
        return delta.delta
    return AreaFraction(delta).delta


def _require_convex(poly: Polygon) -> None:
    if not polygon_is_convex(poly):
        raise GeometryError("floating body requires a convex polygon")


def _cap_area(loop, ux: float, uy: float, c: float) -> float:
    """Area of the part of the loop with u . p >= c."""
    n = len(loop)
    clipped = []
    for i in range(n):
        x0, y0 = loop[i]
        x1, y1 = loop[(i + 1) % n]
        d0 = ux * x0 + uy * y0 - c
        d1 = ux * x1 + uy * y1 - c
        if d0 >= 0.0:
            clipped.append((x0, y0))
            if d1 < 0.0:
                t = d0 / (d0 - d1)
                clipped.append((x0 + t * (x1 - x0), y0 + t * (y1 - y0)))
        elif d1 >= 0.0:
            t = d0 / (d0 - d1)
            clipped.append((x0 + t * (x1 - x0), y0 + t * (y1 - y0)))
    if len(clipped) < 3:
        return 0.0
    total = 0.0
    m = len(clipped)
    for i in range(m):
        x0, y0 = clipped[i]
        x1, y1 = clipped[(i + 1) % m]
        total += x0 * y1 - x1 * y0
    return 0.5 * abs(total)


def _cut_offset(loop, ux: float, uy: float, target: float, area: float, diam: float) -> float:
    """Offset c such that the cap {u . p >= c} has area target."""
    lo = min(ux * x + uy * y for x, y in loop)
    hi = max(ux * x + uy * y for x, y in loop)
    area_tol = _AREA_TOL * area
    bracket_tol = _BRACKET_TOL * diam
    c = 0.5 * (lo + hi)
    while hi - lo >= bracket_tol:
        c = 0.5 * (lo + hi)
        cap = _cap_area(loop, ux, uy, c)
        if abs(cap - target) <= area_tol:
            return c
        if cap > target:
            lo = c
        else:
            hi = c
    return c


def cut_halfplane(poly: Polygon, phi: float, delta) -> Halfplane:
    """Halfplane whose complement cuts a cap of area delta * area(poly).

    The returned halfplane keeps the side away from the outward direction
    (cos phi, sin phi); the cap on the outward side is what floats off.
    """
    d = _coerce_delta(delta)
    _require_convex(poly)
    if not math.isfinite(phi):
        raise GeometryError("phi must be finite")
    loop = [(v.x, v.y) for v in poly.vertices]
    area = polygon_area(poly)
    bb = polygon_bbox(poly)
    diam = math.hypot(bb.width, bb.height)
    ux = math.cos(phi)
    uy = math.sin(phi)
    c = _cut_offset(loop, ux, uy, d * area, area, diam)
    return Halfplane(ux, uy, c)


def chord_midpoint(poly: Polygon, half: Halfplane) -> Point:
    """Midpoint of the chord the halfplane's boundary line cuts in poly."""
    _require_convex(poly)
    ux, uy, c = half.nx, half.ny, half.c
    verts = poly.vertices
    n = len(verts)
    vals = [ux * v.x + uy * v.y - c for v in verts]
    hits: list[tuple[float, float]] = []

    def push(x: float, y: float) -> None:
        for hx, hy in hits:
            if math.hypot(hx - x, hy - y) <= EPS_DIST:
                return
        hits.append((x, y))

    for i in range(n):
        j = (i + 1) % n
        vi, vj = vals[i], vals[j]
        if abs(vi) <= EPS_DIST:
            push(verts[i].x, verts[i].y)
        elif (vi > 0.0) != (vj > 0.0) and abs(vj) > EPS_DIST:
            t = vi / (vi - vj)
            push(
                verts[i].x + t * (verts[j].x - verts[i].x),
                verts[i].y + t * (verts[j].y - verts[i].y),
            )
    if len(hits) < 2:
        raise GeometryError("line does not cut polygon")
    # chord endpoints are the extremes along the line direction
    wx, wy = -uy, ux
    ts = [(wx * x + wy * y, x, y) for x, y in hits]
    ts.sort(key=lambda t: t[0])
    _, x0, y0 = ts[0]
    _, x1, y1 = ts[-1]
    return Point((x0 + x1) / 2.0, (y0 + y1) / 2.0)


def _clip_loop(loop, ux: float, uy: float, c: float):
    """Keep the side u . p <= c of a convex loop of (x, y) tuples."""
    n = len(loop)
    out = []
    for i in range(n):
        x0, y0 = loop[i]
        x1, y1 = loop[(i + 1) % n]
        d0 = ux * x0 + uy * y0 - c
        d1 = ux * x1 + uy * y1 - c
        if d0 <= 0.0:
            out.append((x0, y0))
            if d1 > 0.0:
                t = d0 / (d0 - d1)
                out.append((x0 + t * (x1 - x0), y0 + t * (y1 - y0)))
        elif d1 <= 0.0:
            t = d0 / (d0 - d1)
            out.append((x0 + t * (x1 - x0), y0 + t * (y1 - y0)))
    return out


def dupin_floating_body(poly: Polygon, delta, n_directions: int = 720) -> FloatingBodyResult:
    """Chord-midpoint locus and convex floating body on a direction grid.

    For each of n_directions evenly spaced outward directions the cut of
    area fraction delta is computed; the midpoints of the cutting chords
    form the locus (in direction order), and the intersection of all cut
    halfplanes forms the convex body (None when it collapses to nothing).
    Convexity of the locus is decided by a counterclockwise-turn test with
    EPS_AREA slack.
    """
    d = _coerce_delta(delta)
    _require_convex(poly)
    if not isinstance(n_directions, int) or isinstance(n_directions, bool) or n_directions < 1:
        raise GeometryError("n_directions must be an integer >= 1")
    loop = [(v.x, v.y) for v in poly.vertices]
    area = polygon_area(poly)
    bb = polygon_bbox(poly)
    diam = math.hypot(bb.width, bb.height)
    target = d * area

    midpoints: list[Point] = []
    body = list(loop)
    step = 2.0 * math.pi / n_directions
    for k in range(n_directions):
        phi = k * step
        ux = math.cos(phi)
        uy = math.sin(phi)
        c = _cut_offset(loop, ux, uy, target, area, diam)
        midpoints.append(chord_midpoint(poly, Halfplane(ux, uy, c)))
        if body:
            body = _clip_loop(body, ux, uy, c)
            if len(body) < 3:
                body = []

    convex_fb = _loop_to_polygon(body)
    return FloatingBodyResult(
        delta=d,
        directions=n_directions,
        dupin=tuple(midpoints),
        convex_fb=convex_fb,
        is_dupin_convex=_is_ccw_convex_loop(midpoints),
    )


def _loop_to_polygon(loop) -> Polygon | None:
    cleaned: list[Point] = []
    for x, y in loop:
        p = Point(x, y)
        if not cleaned or not points_equal(cleaned[-1], p):
            cleaned.append(p)
    if len(cleaned) >= 2 and points_equal(cleaned[0], cleaned[-1]):
        cleaned.pop()
    if len(cleaned) < 3:
        return None
    total = 0.0
    m = len(cleaned)
    for i in range(m):
        p = cleaned[i]
        q = cleaned[(i + 1) % m]
        total += p.x * q.y - q.x * p.y
    if abs(total) <= 2.0 * EPS_AREA:
        return None
    return Polygon._unchecked(cleaned)


def _is_ccw_convex_loop(points) -> bool:
    n = len(points)
    if n < 3:
        return True
    for i in range(n):
        a = points[i - 1]
        b = points[i]
        c = points[(i + 1) % n]
        if (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) < -EPS_AREA:
            return False
    return True


def result_to_dict(r: FloatingBodyResult) -> dict:
    return {
        "delta": r.delta,
        "dupin": [[p.x, p.y] for p in r.dupin],
        "convex_fb": None
        if r.convex_fb is None
        else [[v.x, v.y] for v in r.convex_fb.vertices],
        "is_dupin_convex": r.is_dupin_convex,
    }
