"""Seeded input generators and independent oracles shared by the tests.

Everything here is deliberately written from first principles (gift
wrapping instead of the library's monotone chain, direct disk tests
instead of the library's angle predicate) so that agreement between the
library and these routines is meaningful evidence, not a tautology.
"""

from __future__ import annotations

import math


def cross3(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def dist2(a, b):
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def random_points(rng, n, lo=0.0, hi=1.0, decimals=None, dyadic_bits=None):
    """n random (x, y) tuples, optionally snapped for exact round-trips.

    decimals rounds through the printed representation, so the floats
    are exactly what a 12-significant-digit dump parses back to.
    dyadic_bits snaps to multiples of 2**-bits; with bits small enough
    those survive 12-significant-digit printing too, and so do the
    region midpoints a PR quadtree derives from them.
    """
    pts = []
    scale = None if dyadic_bits is None else float(1 << dyadic_bits)
    for _ in range(n):
        x = rng.uniform(lo, hi)
        y = rng.uniform(lo, hi)
        if decimals is not None:
            x = float("%.*f" % (decimals, x))
            y = float("%.*f" % (decimals, y))
        if scale is not None:
            x = round(x * scale) / scale
            y = round(y * scale) / scale
        pts.append((x, y))
    return pts


def jarvis_hull(points):
    """Strict convex hull by gift wrapping, CCW from the lexicographic min.

    Collinear points on the boundary are skipped by always wrapping to
    the point that makes every other point a strict left turn (ties on
    the same ray resolved toward the farthest candidate).
    """
    pts = list(dict.fromkeys(points))
    if len(pts) == 1:
        return [pts[0]]
    start = min(pts)
    hull = [start]
    current = start
    while True:
        candidate = None
        for p in pts:
            if p == current:
                continue
            if candidate is None:
                candidate = p
                continue
            turn = cross3(current, candidate, p)
            if turn < 0 or (turn == 0 and dist2(current, p) > dist2(current, candidate)):
                candidate = p
        if candidate is None or candidate == start:
            break
        hull.append(candidate)
        current = candidate
        if len(hull) > len(pts):
            raise AssertionError("gift wrapping failed to close")
    return hull


def point_in_convex_ccw(p, hull, tol=1e-9):
    """Is p inside or on a CCW convex polygon (list of tuples)?"""
    n = len(hull)
    if n == 1:
        return dist2(p, hull[0]) <= tol * tol
    if n == 2:
        return point_on_segment(p, hull[0], hull[1], tol)
    for i in range(n):
        if cross3(hull[i], hull[(i + 1) % n], p) < -tol:
            return False
    return True


def point_on_segment(p, a, b, tol=1e-9):
    if abs(cross3(a, b, p)) > tol * math.sqrt(max(dist2(a, b), 1e-30)):
        return False
    lo_x, hi_x = min(a[0], b[0]) - tol, max(a[0], b[0]) + tol
    lo_y, hi_y = min(a[1], b[1]) - tol, max(a[1], b[1]) + tol
    return lo_x <= p[0] <= hi_x and lo_y <= p[1] <= hi_y


def gabriel_oracle(points):
    """Edge set of the Gabriel graph: an open diametral disk empties it."""
    n = len(points)
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            cx = (points[i][0] + points[j][0]) / 2.0
            cy = (points[i][1] + points[j][1]) / 2.0
            r2 = dist2(points[i], (cx, cy))
            alive = True
            for k in range(n):
                if k == i or k == j:
                    continue
                if dist2(points[k], (cx, cy)) < r2:
                    alive = False
                    break
            if alive:
                edges.add((i, j))
    return edges


def rng_lune_oracle(points):
    """Edge set of the relative neighborhood graph via the open lune."""
    n = len(points)
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            d2 = dist2(points[i], points[j])
            alive = True
            for k in range(n):
                if k == i or k == j:
                    continue
                if max(dist2(points[k], points[i]), dist2(points[k], points[j])) < d2:
                    alive = False
                    break
            if alive:
                edges.add((i, j))
    return edges


def angle_skeleton_oracle(points, theta, eps_angle=1e-9):
    """Edge set under the raw apex-angle rule, computed with atan2.

    Kills an edge when some third point sees it at an angle of at least
    theta - eps_angle.  Independent of the library's square-root-free
    predicate.
    """
    n = len(points)
    cut = theta - eps_angle
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            alive = True
            for k in range(n):
                if k == i or k == j:
                    continue
                ax = points[i][0] - points[k][0]
                ay = points[i][1] - points[k][1]
                bx = points[j][0] - points[k][0]
                by = points[j][1] - points[k][1]
                ang = math.atan2(abs(ax * by - ay * bx), ax * bx + ay * by)
                if ang >= cut:
                    alive = False
                    break
            if alive:
                edges.add((i, j))
    return edges


def segments_properly_cross(a, b, c, d):
    d1 = cross3(c, d, a)
    d2 = cross3(c, d, b)
    d3 = cross3(a, b, c)
    d4 = cross3(a, b, d)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))


def random_noncrossing_segments(rng, count, lo=0.0, hi=1.0):
    """count non-vertical segments in disjoint horizontal bands.

    Band-disjoint y ranges make crossings impossible while the x spans
    still overlap, so vertical extensions from one segment hit others.
    """
    span = hi - lo
    segs = []
    for i in range(count):
        band = span / count
        y0 = lo + (i + 0.1 + 0.3 * rng.random()) * band
        y1 = lo + (i + 0.6 + 0.3 * rng.random()) * band
        x0 = lo + span * rng.uniform(0.0, 0.45)
        x1 = lo + span * rng.uniform(0.55, 1.0)
        segs.append(((x0, y0), (x1, y1)))
    return segs


def _tour_is_simple(order):
    n = len(order)
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or j == (i + 1) % n:
                continue
            c, d = order[j], order[(j + 1) % n]
            if segments_properly_cross(a, b, c, d):
                return i, j
    return None


def random_simple_polygon(rng, n, lo=0.0, hi=1.0):
    """A random simple n-gon: random points untangled by 2-opt reversals.

    Uncrossing two edges shortens the closed tour, so the loop
    terminates; degenerate outcomes (collinear triples, improper
    touches) are discarded and regenerated.
    """
    while True:
        order = random_points(rng, n, lo, hi)
        if len(set(order)) < n:
            continue
        for _ in range(20 * n * n):
            hit = _tour_is_simple(order)
            if hit is None:
                break
            i, j = hit
            order[i + 1 : j + 1] = reversed(order[i + 1 : j + 1])
        else:
            continue
        if _has_degenerate_corner(order) or _has_improper_contact(order):
            continue
        return order


def _has_degenerate_corner(order, tol=1e-9):
    n = len(order)
    for i in range(n):
        a, b, c = order[i - 1], order[i], order[(i + 1) % n]
        if abs(cross3(a, b, c)) <= tol:
            return True
    return False


def _has_improper_contact(order, tol=1e-9):
    n = len(order)
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        for j in range(n):
            if j == i or j == (i + 1) % n:
                continue
            if point_on_segment(order[j], a, b, tol):
                return True
    return False


def random_convex_polygon(rng, n_points, lo=-1.0, hi=1.0, min_vertices=3):
    """Hull of a random cloud, as coordinate tuples (CCW, >= 3 vertices)."""
    while True:
        hull = jarvis_hull(random_points(rng, n_points, lo, hi))
        if len(hull) >= min_vertices:
            return hull


def peel_oracle(points):
    """Layers as sets, peeled with the gift-wrapping hull above."""
    remaining = list(points)
    layers = []
    while remaining:
        hull = jarvis_hull(remaining)
        if len(hull) <= 2:
            # everything left sits on one line (or one point): single layer
            on_line = [
                p for p in remaining
                if len(hull) == 1 or point_on_segment(p, hull[0], hull[-1], 1e-12)
            ]
            layers.append(set(on_line))
            remaining = [p for p in remaining if p not in on_line]
            continue
        boundary = set()
        for p in remaining:
            for i in range(len(hull)):
                if point_on_segment(p, hull[i], hull[(i + 1) % len(hull)], 1e-12):
                    boundary.add(p)
                    break
        layers.append(boundary)
        remaining = [p for p in remaining if p not in boundary]
    return layers


def hull_area(points):
    hull = jarvis_hull(list(points))
    if len(hull) < 3:
        return 0.0
    total = 0.0
    for i in range(len(hull)):
        x0, y0 = hull[i]
        x1, y1 = hull[(i + 1) % len(hull)]
        total += x0 * y1 - x1 * y0
    return abs(total) / 2.0
