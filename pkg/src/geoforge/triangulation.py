"""Ear-clipping triangulation and uniform sampling over the result.

The clipper repeatedly scans the remaining vertices from the lowest index
and removes the first ear (a convex corner whose triangle contains no
other remaining vertex), which makes the output deterministic.  Straight
(zero-area) corners are dropped on sight without emitting a triangle so
they can never stall the scan.

Sampling picks a triangle by inverse transform over the cumulative areas,
then folds two unit uniforms into barycentric coordinates.  The generator
is Python's Mersenne Twister (random.Random) seeded with the request's
64-bit seed; per sample the draw order is fixed: triangle pick, then u,
then v.  CPython guarantees the stability of random() across releases,
which makes sampled output reproducible byte for byte.
"""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass

from .core import EPS_AREA, GeometryError, Point, Polygon, cross


@dataclass(frozen=True)
class Triangulation:
    polygon: Polygon
    triangles: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class SampleRequest:
    count: int
    seed: int

    def __post_init__(self) -> None:
        if not isinstance(self.count, int) or isinstance(self.count, bool) or self.count < 1:
            raise GeometryError("count must be an integer >= 1")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise GeometryError("seed must be an integer")
        if not (0 <= self.seed < 2**64):
            raise GeometryError("seed must fit in 64 unsigned bits")


def triangulate(poly: Polygon) -> Triangulation:
    """Ear-clipping triangulation; triangles index into poly.vertices."""
    verts = poly.vertices
    alive = list(range(len(verts)))
    triangles: list[tuple[int, int, int]] = []
    while len(alive) > 3:
        if not _clip_one(verts, alive, triangles):
            raise GeometryError("ear clipping stalled")
    ia, ib, ic = alive
    if cross(verts[ia], verts[ib], verts[ic]) > EPS_AREA:
        triangles.append((ia, ib, ic))
    return Triangulation(polygon=poly, triangles=tuple(triangles))


def _clip_one(verts, alive: list[int], triangles: list) -> bool:
    m = len(alive)
    for pos in range(m):
        ia = alive[pos - 1]
        ib = alive[pos]
        ic = alive[(pos + 1) % m]
        a, b, c = verts[ia], verts[ib], verts[ic]
        cr = cross(a, b, c)
        if abs(cr) <= EPS_AREA:
            # straight corner: zero-area ear, drop the vertex outright
            del alive[pos]
            return True
        if cr < 0.0:
            continue
        if _triangle_blocked(verts, alive, ia, ib, ic, a, b, c):
            continue
        triangles.append((ia, ib, ic))
        del alive[pos]
        return True
    return False


def _triangle_blocked(verts, alive, ia, ib, ic, a, b, c) -> bool:
    """Does any other remaining vertex lie in (or on) triangle abc?"""
    for idx in alive:
        if idx == ia or idx == ib or idx == ic:
            continue
        p = verts[idx]
        if (
            cross(a, b, p) >= -EPS_AREA
            and cross(b, c, p) >= -EPS_AREA
            and cross(c, a, p) >= -EPS_AREA
        ):
            return True
    return False


def triangle_areas(tri: Triangulation) -> list[float]:
    verts = tri.polygon.vertices
    return [
        0.5 * cross(verts[i], verts[j], verts[k]) for i, j, k in tri.triangles
    ]


def sample_points(tri: Triangulation, request: SampleRequest) -> list[Point]:
    """Uniform points in the polygon, reproducible from the request seed."""
    if not isinstance(request, SampleRequest):
        raise GeometryError("request must be a SampleRequest")
    rng = random.Random(request.seed)
    return _sample_with_rng(tri, request.count, rng)


def _sample_with_rng(tri: Triangulation, count: int, rng) -> list[Point]:
    areas = triangle_areas(tri)
    if not areas:
        raise GeometryError("triangulation has no triangles")
    cumulative: list[float] = []
    total = 0.0
    for a in areas:
        total += a
        cumulative.append(total)
    verts = tri.polygon.vertices
    out: list[Point] = []
    last = len(areas) - 1
    for _ in range(count):
        r = rng.random() * total
        idx = min(bisect.bisect_right(cumulative, r), last)
        i, j, k = tri.triangles[idx]
        a, b, c = verts[i], verts[j], verts[k]
        u = rng.random()
        v = rng.random()
        if u + v > 1.0:
            u = 1.0 - u
            v = 1.0 - v
        out.append(
            Point(a.x + u * (b.x - a.x) + v * (c.x - a.x),
                  a.y + u * (b.y - a.y) + v * (c.y - a.y))
        )
    return out


def triangulation_to_dict(tri: Triangulation, samples=()) -> dict:
    return {
        "triangles": [[i, j, k] for i, j, k in tri.triangles],
        "samples": [[p.x, p.y] for p in samples],
    }
