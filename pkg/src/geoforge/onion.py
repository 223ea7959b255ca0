"""Onion decomposition: repeated convex-hull peeling.

Each layer takes every point lying on the hull boundary of what remains,
vertices and edge-interior points alike, so collinear points leave with
the layer they sit on.  Peeling continues until nothing is left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EPS_DIST,
    GeometryError,
    Point,
    convex_hull,
    distance,
    point_segment_distance,
    points_equal,
)


@dataclass(frozen=True)
class OnionDecomposition:
    layers: tuple[tuple[Point, ...], ...]

    def __len__(self) -> int:
        return len(self.layers)


def onion_decomposition(points) -> OnionDecomposition:
    """Peel a point set into hull layers.

    Every layer is listed in counterclockwise boundary order starting at
    its lexicographically smallest point.  Duplicate input points (under
    the distance epsilon) are rejected.
    """
    pts = list(points)
    if not pts:
        raise GeometryError("empty point set")
    _reject_duplicates(pts)
    remaining = pts
    layers: list[tuple[Point, ...]] = []
    while remaining:
        layer = _boundary_layer(remaining)
        # duplicates are rejected above, so coordinates identify points
        taken = {(p.x, p.y) for p in layer}
        remaining = [p for p in remaining if (p.x, p.y) not in taken]
        layers.append(tuple(layer))
    return OnionDecomposition(tuple(layers))


def _reject_duplicates(pts) -> None:
    order = sorted(range(len(pts)), key=lambda i: (pts[i].x, pts[i].y))
    for a in range(len(order) - 1):
        i = order[a]
        for b in range(a + 1, len(order)):
            j = order[b]
            if pts[j].x - pts[i].x > EPS_DIST:
                break
            if points_equal(pts[i], pts[j]):
                raise GeometryError("duplicate point")


def _boundary_layer(remaining: list[Point]) -> list[Point]:
    if len(remaining) == 1:
        return list(remaining)
    hull = convex_hull(remaining)
    if len(hull) == 2:
        return _collinear_layer(remaining, hull[0], hull[1])
    placed = set()
    layer: list[Point] = []
    n = len(hull)
    hull_xy = {(v.x, v.y) for v in hull}
    for i in range(n):
        a = hull[i]
        b = hull[(i + 1) % n]
        layer.append(a)
        placed.add((a.x, a.y))
        on_edge = []
        for p in remaining:
            key = (p.x, p.y)
            if key in hull_xy or key in placed:
                continue
            if point_segment_distance(p, a, b) <= EPS_DIST:
                on_edge.append(p)
                placed.add(key)
        on_edge.sort(key=lambda p: distance(a, p))
        layer.extend(on_edge)
    return layer


def _collinear_layer(remaining: list[Point], lo: Point, hi: Point) -> list[Point]:
    """All remaining points sit on one segment; order them along it."""
    dx = hi.x - lo.x
    dy = hi.y - lo.y
    return sorted(remaining, key=lambda p: (p.x - lo.x) * dx + (p.y - lo.y) * dy)


def layers_to_lists(d: OnionDecomposition) -> list:
    return [[[p.x, p.y] for p in layer] for layer in d.layers]
